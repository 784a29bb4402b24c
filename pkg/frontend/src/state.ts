/** Client-side view-state rules: snapshot-version tracking and input
 * validation, kept pure so they are directly testable. */

export interface VersionCheck {
  version: number;
  stale: boolean;
}

/** A response carrying a different snapshot version than the one currently
 * rendered must surface a refresh hint, never silently mix. */
export function checkVersion(current: number | null, incoming: number): VersionCheck {
  return { version: incoming, stale: current !== null && incoming !== current };
}

const TOKEN_RE = /[^\W_]+(?:['-][^\W_]+)*/gu;

export function tokenCount(text: string): number {
  return (text.toLowerCase().match(TOKEN_RE) ?? []).length;
}

/** Empty queries are rejected client-side; no request is sent. */
export function validateSearchQuery(q: string): string | null {
  if (tokenCount(q) === 0) return "Enter at least one search term.";
  return null;
}

/** Trend phrases mirror the API precondition: one to three tokens. */
export function validateNgramPhrase(phrase: string): string | null {
  const n = tokenCount(phrase);
  if (n === 0) return "Enter a phrase of one to three words.";
  if (n > 3) return "Trend phrases are limited to three words.";
  return null;
}

export function validateYearRange(from: number, to: number): string | null {
  if (!Number.isFinite(from) || !Number.isFinite(to)) return "Years must be numbers.";
  if (from > to) return "The start year must not exceed the end year.";
  return null;
}
