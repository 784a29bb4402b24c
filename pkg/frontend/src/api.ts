/** Minimal fetch wrapper around the corpus API. */

import type { ErrorBody } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: ErrorBody | null
  ) {
    super(body?.message ?? `request failed with status ${status}`);
  }
}

export async function getJson<T>(path: string, baseUrl = ""): Promise<T> {
  let response: Response;
  try {
    response = await fetch(baseUrl + path, { headers: { accept: "application/json" } });
  } catch {
    throw new ApiError(0, null);
  }
  if (!response.ok) {
    const body = (await response.json().catch(() => null)) as ErrorBody | null;
    throw new ApiError(response.status, body);
  }
  return (await response.json()) as T;
}
