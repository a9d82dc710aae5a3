/** Thin client for the suggestion service. */

import type { HealthResponse, SuggestResponse } from "./types.js";

export type FetchLike = (url: string) => Promise<Response>;

export class SuggestClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (url) => fetch(url),
  ) {}

  async suggest(token: string, top = 5): Promise<SuggestResponse> {
    const url =
      `${this.baseUrl}/api/suggest?q=${encodeURIComponent(token)}&top=${top}`;
    const resp = await this.fetchImpl(url);
    if (!resp.ok) {
      const body = await resp.json().catch(() => ({}));
      throw new Error(body.error ?? `suggest failed with status ${resp.status}`);
    }
    return (await resp.json()) as SuggestResponse;
  }

  async health(): Promise<HealthResponse> {
    const resp = await this.fetchImpl(`${this.baseUrl}/api/health`);
    if (!resp.ok) {
      throw new Error(`health failed with status ${resp.status}`);
    }
    return (await resp.json()) as HealthResponse;
  }
}
