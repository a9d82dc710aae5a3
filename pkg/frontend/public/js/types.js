/** Wire types of the suggestion service (GET /api/suggest). */
export {};
