/** Hash-based routing. Every view is deep-linkable: parseRoute and
 * formatRoute round-trip, and apiPathsFor maps a route to the API requests
 * that fully reproduce it. */

export type Route =
  | { kind: "home" }
  | { kind: "search"; q: string; domain: string; page: number }
  | { kind: "paper"; id: string }
  | { kind: "author"; key: string }
  | { kind: "venue"; key: string }
  | { kind: "topics" }
  | { kind: "topic"; category: string; subtopic: string }
  | { kind: "timeline" }
  | { kind: "ngrams"; phrase: string; from: number; to: number }
  | { kind: "list"; listKind: string }
  | { kind: "urls" }
  | { kind: "url"; domain: string }
  | { kind: "notfound"; path: string };

const enc = encodeURIComponent;
const dec = decodeURIComponent;

export function formatRoute(route: Route): string {
  switch (route.kind) {
    case "home":
      return "#/";
    case "search":
      return `#/search?q=${enc(route.q)}&domain=${enc(route.domain)}&page=${route.page}`;
    case "paper":
      return `#/paper/${enc(route.id)}`;
    case "author":
      return `#/author/${enc(route.key)}`;
    case "venue":
      return `#/venue/${enc(route.key)}`;
    case "topics":
      return "#/topics";
    case "topic":
      return `#/topic/${enc(route.category)}/${enc(route.subtopic)}`;
    case "timeline":
      return "#/timeline";
    case "ngrams":
      return `#/ngrams?phrase=${enc(route.phrase)}&from=${route.from}&to=${route.to}`;
    case "list":
      return `#/list/${enc(route.listKind)}`;
    case "urls":
      return "#/urls";
    case "url":
      return `#/url/${enc(route.domain)}`;
    case "notfound":
      return `#/${route.path}`;
  }
}

export function parseRoute(hash: string): Route {
  const raw = hash.startsWith("#") ? hash.slice(1) : hash;
  const [path, queryString] = raw.split("?", 2);
  const params = new URLSearchParams(queryString ?? "");
  const parts = path.split("/").filter((p) => p.length > 0);

  if (parts.length === 0) return { kind: "home" };
  switch (parts[0]) {
    case "search":
      return {
        kind: "search",
        q: params.get("q") ?? "",
        domain: params.get("domain") ?? "Papers",
        page: parseInt(params.get("page") ?? "1", 10) || 1,
      };
    case "paper":
      if (parts.length === 2) return { kind: "paper", id: dec(parts[1]) };
      break;
    case "author":
      if (parts.length === 2) return { kind: "author", key: dec(parts[1]) };
      break;
    case "venue":
      if (parts.length === 2) return { kind: "venue", key: dec(parts[1]) };
      break;
    case "topics":
      if (parts.length === 1) return { kind: "topics" };
      break;
    case "topic":
      if (parts.length === 3)
        return { kind: "topic", category: dec(parts[1]), subtopic: dec(parts[2]) };
      break;
    case "timeline":
      return { kind: "timeline" };
    case "ngrams":
      return {
        kind: "ngrams",
        phrase: params.get("phrase") ?? "",
        from: parseInt(params.get("from") ?? "1965", 10) || 1965,
        to: parseInt(params.get("to") ?? "2030", 10) || 2030,
      };
    case "list":
      if (parts.length === 2) return { kind: "list", listKind: dec(parts[1]) };
      break;
    case "urls":
      if (parts.length === 1) return { kind: "urls" };
      break;
    case "url":
      if (parts.length === 2) return { kind: "url", domain: dec(parts[1]) };
      break;
  }
  return { kind: "notfound", path };
}

/** API requests needed to render a route; reloading a deep link replays
 * exactly these. */
export function apiPathsFor(route: Route): string[] {
  switch (route.kind) {
    case "home":
      return ["/api/corpus/summary"];
    case "search":
      return [
        `/api/search?q=${enc(route.q)}&domain=${enc(route.domain)}&page=${route.page}`,
      ];
    case "paper":
      return [`/api/papers/${enc(route.id)}`];
    case "author":
      return [`/api/authors/${enc(route.key)}`];
    case "venue":
      return [`/api/venues/${enc(route.key)}`];
    case "topics":
      return ["/api/topics"];
    case "topic":
      return [`/api/topics/${enc(route.category)}/${enc(route.subtopic)}`];
    case "timeline":
      return ["/api/topics/timeline"];
    case "ngrams":
      return [
        `/api/ngrams?phrase=${enc(route.phrase)}&from=${route.from}&to=${route.to}`,
      ];
    case "list":
      return [`/api/lists/${enc(route.listKind)}`];
    case "urls":
      return ["/api/urls/top?k=25"];
    case "url":
      return [`/api/urls/${enc(route.domain)}`];
    case "notfound":
      return [];
  }
}
