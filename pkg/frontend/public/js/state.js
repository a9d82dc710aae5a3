/**
 * Composer state machine, kept pure so every transition is unit-testable.
 *
 * Suggestions always belong to the newest request generation: every edit of
 * the current token bumps the generation, and a response is applied only if
 * its generation still matches. Network reordering therefore can never
 * regress the displayed list.
 */
export const initialState = {
    composed: "",
    currentToken: "",
    suggestions: [],
    selectionIndex: null,
    requestGeneration: 0,
};
/** New token typed. Returns the next state plus the request to issue, if any. */
export function onInput(state, token) {
    const generation = state.requestGeneration + 1;
    if (token === "") {
        // Clear without a request; bumping the generation invalidates in-flight ones.
        return {
            state: {
                ...state,
                currentToken: "",
                suggestions: [],
                selectionIndex: null,
                requestGeneration: generation,
            },
            request: null,
        };
    }
    return {
        state: { ...state, currentToken: token, requestGeneration: generation },
        request: { generation, token },
    };
}
/** Response arrived. Applied only when it matches the latest generation. */
export function applyResponse(state, generation, suggestions) {
    if (generation !== state.requestGeneration) {
        return state; // stale: a newer request owns the panel
    }
    return {
        ...state,
        // Order is taken as served; the UI never re-sorts.
        suggestions: [...suggestions],
        selectionIndex: suggestions.length > 0 ? 0 : null,
    };
}
/** Commit the suggestion at index; out-of-range indexes are ignored. */
export function onSelect(state, index) {
    if (index < 0 || index >= state.suggestions.length) {
        return state;
    }
    return {
        ...state,
        composed: state.composed + state.suggestions[index].sinhala + " ",
        currentToken: "",
        suggestions: [],
        selectionIndex: null,
        requestGeneration: state.requestGeneration + 1,
    };
}
/** Escape hatch: commit the raw token verbatim when no suggestion fits. */
export function insertAsIs(state) {
    if (state.currentToken === "") {
        return state;
    }
    return {
        ...state,
        composed: state.composed + state.currentToken + " ",
        currentToken: "",
        suggestions: [],
        selectionIndex: null,
        requestGeneration: state.requestGeneration + 1,
    };
}
/** Move the highlight by delta, clamped to the list. */
export function moveSelection(state, delta) {
    if (state.suggestions.length === 0 || state.selectionIndex === null) {
        return state;
    }
    const next = Math.min(state.suggestions.length - 1, Math.max(0, state.selectionIndex + delta));
    return { ...state, selectionIndex: next };
}
