import { describe, expect, it } from "vitest";

import {
  applyResponse,
  initialState,
  insertAsIs,
  moveSelection,
  onInput,
  onSelect,
} from "../src/state.js";
import type { SuggestionView } from "../src/types.js";

function sugg(sinhala: string, score = 90): SuggestionView {
  return { sinhala, romanization: "x", score, source: "direct" };
}

describe("onInput", () => {
  it("issues a generation-tagged request for a token", () => {
    const { state, request } = onInput(initialState, "khmd");
    expect(state.currentToken).toBe("khmd");
    expect(state.requestGeneration).toBe(1);
    expect(request).toEqual({ generation: 1, token: "khmd" });
  });

  it("clears the panel without a request on empty token", () => {
    const typed = onInput(initialState, "khmd").state;
    const withPanel = applyResponse(typed, 1, [sugg("කොහොමද")]);
    const { state, request } = onInput(withPanel, "");
    expect(request).toBeNull();
    expect(state.suggestions).toEqual([]);
    expect(state.selectionIndex).toBeNull();
  });

  it("bumps the generation even when clearing, invalidating in-flight requests", () => {
    const typed = onInput(initialState, "khmd").state;
    const cleared = onInput(typed, "").state;
    const late = applyResponse(cleared, 1, [sugg("කොහොමද")]);
    expect(late.suggestions).toEqual([]);
  });
});

describe("applyResponse", () => {
  it("accepts the current generation and highlights the top entry", () => {
    const { state, request } = onInput(initialState, "khmd");
    const next = applyResponse(state, request!.generation, [sugg("කොහොමද"), sugg("කවදද")]);
    expect(next.suggestions.map((s) => s.sinhala)).toEqual(["කොහොමද", "කවදද"]);
    expect(next.selectionIndex).toBe(0);
  });

  it("discards a response for a superseded generation", () => {
    let state = onInput(initialState, "khm").state; // generation 1
    state = onInput(state, "khmd").state; // generation 2
    state = applyResponse(state, 2, [sugg("කොහොමද")]);
    const afterStale = applyResponse(state, 1, [sugg("කෑම")]);
    expect(afterStale).toBe(state); // generation 1 arrived late and was dropped
  });

  it("keeps served order untouched", () => {
    const { state, request } = onInput(initialState, "k");
    const served = [sugg("b", 10), sugg("a", 99)];
    const next = applyResponse(state, request!.generation, served);
    expect(next.suggestions.map((s) => s.sinhala)).toEqual(["b", "a"]);
  });
});

describe("onSelect", () => {
  function stateWithPanel() {
    const { state, request } = onInput(initialState, "khmd");
    return applyResponse(state, request!.generation, [sugg("කොහොමද"), sugg("කවදද")]);
  }

  it("appends the selection plus a space and clears the panel", () => {
    const next = onSelect(stateWithPanel(), 0);
    expect(next.composed).toBe("කොහොමද ");
    expect(next.currentToken).toBe("");
    expect(next.suggestions).toEqual([]);
    expect(next.selectionIndex).toBeNull();
  });

  it("accumulates across selections", () => {
    let state = onSelect(stateWithPanel(), 0);
    state = applyResponse(onInput(state, "amma").state, state.requestGeneration + 1, [
      sugg("අම්මා"),
    ]);
    state = onSelect(state, 0);
    expect(state.composed).toBe("කොහොමද අම්මා ");
  });

  it("ignores an out-of-range index", () => {
    const state = stateWithPanel();
    expect(onSelect(state, 5)).toBe(state);
    expect(onSelect(state, -1)).toBe(state);
  });

  it("ignores selection on an empty panel", () => {
    expect(onSelect(initialState, 0)).toBe(initialState);
  });
});

describe("insertAsIs", () => {
  it("commits the raw token", () => {
    const state = onInput(initialState, "zzz").state;
    expect(insertAsIs(state).composed).toBe("zzz ");
  });

  it("does nothing without a token", () => {
    expect(insertAsIs(initialState)).toBe(initialState);
  });
});

describe("moveSelection", () => {
  it("clamps to the list bounds", () => {
    const { state, request } = onInput(initialState, "khmd");
    const panel = applyResponse(state, request!.generation, [sugg("a"), sugg("b")]);
    expect(moveSelection(panel, 1).selectionIndex).toBe(1);
    expect(moveSelection(moveSelection(panel, 1), 1).selectionIndex).toBe(1);
    expect(moveSelection(panel, -1).selectionIndex).toBe(0);
  });
});
