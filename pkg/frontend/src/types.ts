/** Wire types of the suggestion service (GET /api/suggest). */

export interface SuggestionView {
  sinhala: string;
  romanization: string;
  score: number;
  source: string;
}

export interface SuggestResponse {
  query: string;
  scenario: string;
  suggestions: SuggestionView[];
}

export interface HealthResponse {
  status: string;
  lexicon_entries: number;
}
