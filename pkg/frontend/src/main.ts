/** Bootstrap: hash routing, fetching, and rendering into #app.
 *
 * A response is applied only if its route still matches the current view,
 * and a response from a different snapshot version than the one on screen
 * raises a visible refresh hint instead of silently mixing data.
 */

import { ApiError, getJson } from "./api.js";
import {
  renderAuthor,
  renderError,
  renderNgrams,
  renderPaper,
  renderRankedList,
  renderSearch,
  renderStaleHint,
  renderSummary,
  renderTimeline,
  renderTopicDistribution,
  renderTopics,
  renderUrlDomain,
  renderUrlsTop,
  renderVenue,
} from "./render.js";
import { apiPathsFor, formatRoute, parseRoute, Route } from "./router.js";
import {
  checkVersion,
  validateNgramPhrase,
  validateSearchQuery,
  validateYearRange,
} from "./state.js";

interface Rendered {
  version: number | null;
  html: string;
}

let renderedVersion: number | null = null;
let activeHash = "";

const RANKED_KINDS = [
  "RecentPopularPapers",
  "SurveyPapers",
  "SeminalPapers",
  "DiversePapers",
  "RecentPopularAuthors",
  "LifetimePopularAuthors",
  "TopPublishingAuthors",
  "RecentProlificAuthors",
  "DiverseAuthors",
  "YoungPopularAuthors",
];

async function view(route: Route): Promise<Rendered> {
  const path = apiPathsFor(route)[0];
  switch (route.kind) {
    case "home": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderSummary(body) };
    }
    case "search": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderSearch(body) };
    }
    case "paper": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderPaper(body) };
    }
    case "author": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderAuthor(body) };
    }
    case "venue": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderVenue(body) };
    }
    case "topics": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderTopics(body) };
    }
    case "topic": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderTopicDistribution(body) };
    }
    case "timeline": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderTimeline(body) };
    }
    case "ngrams": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderNgrams(body) };
    }
    case "list": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderRankedList(body) };
    }
    case "urls": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderUrlsTop(body) };
    }
    case "url": {
      const body = await getJson<any>(path);
      return { version: body.version, html: renderUrlDomain(body) };
    }
    case "notfound":
      return {
        version: renderedVersion,
        html: renderError(404, {
          error_code: "unknown_route",
          message: `No such view: ${route.path}`,
        }),
      };
  }
}

function setContent(html: string, version: number | null): void {
  const app = document.getElementById("app");
  if (app) app.innerHTML = html;
  const banner = document.getElementById("version-banner");
  if (banner && version !== null) banner.textContent = `snapshot v${version}`;
}

async function navigate(): Promise<void> {
  const hash = window.location.hash || "#/";
  activeHash = hash;
  const route = parseRoute(hash);
  try {
    const rendered = await view(route);
    // Another navigation won the race; drop this response.
    if (activeHash !== hash) return;
    if (rendered.version !== null) {
      const check = checkVersion(renderedVersion, rendered.version);
      if (check.stale && renderedVersion !== null) {
        document
          .getElementById("hints")
          ?.insertAdjacentHTML("beforeend", renderStaleHint(renderedVersion, rendered.version));
      }
      renderedVersion = check.version;
    }
    setContent(rendered.html, renderedVersion);
  } catch (err) {
    if (activeHash !== hash) return;
    if (err instanceof ApiError) {
      setContent(renderError(err.status, err.body), renderedVersion);
    } else {
      setContent(renderError(0, null), renderedVersion);
    }
  }
}

function wireSearchForm(): void {
  const form = document.getElementById("search-form") as HTMLFormElement | null;
  if (!form) return;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const q = (document.getElementById("search-q") as HTMLInputElement).value;
    const domain = (document.getElementById("search-domain") as HTMLSelectElement).value;
    const problem = validateSearchQuery(q);
    const messageBox = document.getElementById("form-message");
    if (problem) {
      if (messageBox) messageBox.textContent = problem;
      return; // invalid input: no request leaves the client
    }
    if (messageBox) messageBox.textContent = "";
    window.location.hash = formatRoute({ kind: "search", q, domain, page: 1 });
  });
}

function wireNgramForm(): void {
  const form = document.getElementById("ngram-form") as HTMLFormElement | null;
  if (!form) return;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const phrase = (document.getElementById("ngram-phrase") as HTMLInputElement).value;
    const from = parseInt((document.getElementById("ngram-from") as HTMLInputElement).value, 10);
    const to = parseInt((document.getElementById("ngram-to") as HTMLInputElement).value, 10);
    const problem = validateNgramPhrase(phrase) ?? validateYearRange(from, to);
    const messageBox = document.getElementById("form-message");
    if (problem) {
      if (messageBox) messageBox.textContent = problem;
      return;
    }
    if (messageBox) messageBox.textContent = "";
    window.location.hash = formatRoute({ kind: "ngrams", phrase, from, to });
  });
}

function wireNav(): void {
  const select = document.getElementById("list-kind") as HTMLSelectElement | null;
  if (!select) return;
  for (const kind of RANKED_KINDS) {
    const option = document.createElement("option");
    option.value = kind;
    option.textContent = kind;
    select.appendChild(option);
  }
  select.addEventListener("change", () => {
    if (select.value) window.location.hash = formatRoute({ kind: "list", listKind: select.value });
  });
}

export function start(): void {
  wireSearchForm();
  wireNgramForm();
  wireNav();
  window.addEventListener("hashchange", () => void navigate());
  void navigate();
}

if (typeof window !== "undefined" && document.getElementById("app")) {
  start();
}
