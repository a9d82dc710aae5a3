/** Keyboard layer: maps key events on the input field to composer actions. */
/** Digit keys 1..5 pick the corresponding suggestion. */
export const DIGIT_SELECT_COUNT = 5;
export function actionForKey(key, modifiers = {}) {
    if (key >= "1" && key <= String(DIGIT_SELECT_COUNT)) {
        return { kind: "select", index: Number(key) - 1 };
    }
    switch (key) {
        case "Enter":
            return modifiers.ctrl ? { kind: "insert-as-is" } : { kind: "commit-highlighted" };
        case "ArrowDown":
            return { kind: "move", delta: 1 };
        case "ArrowUp":
            return { kind: "move", delta: -1 };
        case "Escape":
            return { kind: "clear" };
        default:
            return null;
    }
}
