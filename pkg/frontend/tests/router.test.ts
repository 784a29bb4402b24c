import { describe, expect, test } from "vitest";
import { apiPathsFor, formatRoute, parseRoute, Route } from "../src/router.js";

const ROUTES: Route[] = [
  { kind: "home" },
  { kind: "search", q: "machine translation", domain: "Papers", page: 3 },
  { kind: "search", q: "garcía & friends?", domain: "Authors", page: 1 },
  { kind: "paper", id: "P00-1000" },
  { kind: "author", key: "jose garcia" },
  { kind: "author", key: "liam o'connor" },
  { kind: "venue", key: "acl" },
  { kind: "topics" },
  { kind: "topic", category: "DatasetType", subtopic: "clinical notes" },
  { kind: "topic", category: "Task", subtopic: "Machine Translation" },
  { kind: "timeline" },
  { kind: "ngrams", phrase: "neural machine translation", from: 2000, to: 2019 },
  { kind: "list", listKind: "SeminalPapers" },
  { kind: "urls" },
  { kind: "url", domain: "stanford.edu" },
];

describe("route round-trips", () => {
  for (const route of ROUTES) {
    test(`${route.kind}: parse(format(r)) == r`, () => {
      expect(parseRoute(formatRoute(route))).toEqual(route);
    });
  }

  test("unknown paths become notfound", () => {
    expect(parseRoute("#/nonsense/deep/path").kind).toBe("notfound");
    expect(parseRoute("#/paper").kind).toBe("notfound");
  });

  test("empty hash is home", () => {
    expect(parseRoute("")).toEqual({ kind: "home" });
    expect(parseRoute("#/")).toEqual({ kind: "home" });
  });
});

describe("api paths", () => {
  test("every rendering route maps to at least one API request", () => {
    for (const route of ROUTES) {
      expect(apiPathsFor(route).length).toBeGreaterThan(0);
    }
  });

  test("deep-link reload replays the identical request", () => {
    for (const route of ROUTES) {
      const reloaded = parseRoute(formatRoute(route));
      expect(apiPathsFor(reloaded)).toEqual(apiPathsFor(route));
    }
  });

  test("path segments are escaped", () => {
    expect(apiPathsFor({ kind: "author", key: "jose garcia" })[0]).toBe(
      "/api/authors/jose%20garcia"
    );
    expect(
      apiPathsFor({ kind: "topic", category: "DatasetType", subtopic: "clinical notes" })[0]
    ).toBe("/api/topics/DatasetType/clinical%20notes");
  });
});
