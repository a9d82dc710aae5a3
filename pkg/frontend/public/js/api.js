/** Thin client for the suggestion service. */
export class SuggestClient {
    constructor(baseUrl = "", fetchImpl = (url) => fetch(url)) {
        this.baseUrl = baseUrl;
        this.fetchImpl = fetchImpl;
    }
    async suggest(token, top = 5) {
        const url = `${this.baseUrl}/api/suggest?q=${encodeURIComponent(token)}&top=${top}`;
        const resp = await this.fetchImpl(url);
        if (!resp.ok) {
            const body = await resp.json().catch(() => ({}));
            throw new Error(body.error ?? `suggest failed with status ${resp.status}`);
        }
        return (await resp.json());
    }
    async health() {
        const resp = await this.fetchImpl(`${this.baseUrl}/api/health`);
        if (!resp.ok) {
            throw new Error(`health failed with status ${resp.status}`);
        }
        return (await resp.json());
    }
}
