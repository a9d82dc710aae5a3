/**
 * DOM controller: wires the input field, suggestion panel, and composed
 * message area to the state machine and the suggestion service.
 */
import { debounce } from "./debounce.js";
import { actionForKey } from "./keybindings.js";
import { applyResponse, initialState, insertAsIs, moveSelection, onInput, onSelect, } from "./state.js";
export const DEBOUNCE_MS = 150;
export class Composer {
    constructor(el, client, debounceMs = DEBOUNCE_MS, topK = 5) {
        this.el = el;
        this.client = client;
        this.topK = topK;
        this.state = initialState;
        this.scheduleRequest = debounce((req) => void this.issue(req), debounceMs);
        el.input.addEventListener("input", () => this.handleInput(el.input.value));
        el.input.addEventListener("keydown", (ev) => this.handleKey(ev));
        el.panel.addEventListener("click", (ev) => this.handleClick(ev));
        this.render();
    }
    setState(next) {
        if (next !== this.state) {
            this.state = next;
            this.render();
        }
    }
    handleInput(token) {
        const { state, request } = onInput(this.state, token.trim());
        this.setState(state);
        if (request) {
            this.scheduleRequest(request);
        }
        else {
            this.scheduleRequest.cancel();
        }
    }
    async issue(req) {
        try {
            const resp = await this.client.suggest(req.token, this.topK);
            this.setState(applyResponse(this.state, req.generation, resp.suggestions));
            this.showNotice("");
        }
        catch (err) {
            // Keep the prior panel; a failed request must not wipe good suggestions.
            this.showNotice(err instanceof Error ? err.message : String(err));
        }
    }
    select(index) {
        const next = onSelect(this.state, index);
        if (next !== this.state) {
            this.scheduleRequest.cancel();
            this.setState(next);
            this.el.input.value = "";
            this.el.input.focus();
        }
    }
    handleKey(ev) {
        const action = actionForKey(ev.key, { ctrl: ev.ctrlKey });
        if (!action)
            return;
        if (action.kind === "select" && this.state.suggestions.length === 0) {
            return; // let digits type through while the panel is empty
        }
        ev.preventDefault();
        switch (action.kind) {
            case "select":
                this.select(action.index);
                break;
            case "commit-highlighted":
                if (this.state.selectionIndex !== null) {
                    this.select(this.state.selectionIndex);
                }
                else {
                    this.setState(insertAsIs(this.state));
                    this.el.input.value = "";
                }
                break;
            case "insert-as-is":
                this.setState(insertAsIs(this.state));
                this.el.input.value = "";
                break;
            case "move":
                this.setState(moveSelection(this.state, action.delta));
                break;
            case "clear":
                this.handleInput("");
                this.el.input.value = "";
                break;
        }
    }
    handleClick(ev) {
        const item = ev.target.closest("[data-index]");
        if (item instanceof HTMLElement && item.dataset.index !== undefined) {
            this.select(Number(item.dataset.index));
        }
    }
    showNotice(message) {
        this.el.notice.textContent = message;
        this.el.notice.hidden = message === "";
    }
    render() {
        this.el.composed.textContent = this.state.composed;
        const { suggestions, selectionIndex } = this.state;
        this.el.panel.replaceChildren(...suggestions.map((s, i) => {
            const li = document.createElement("li");
            li.dataset.index = String(i);
            li.className = i === selectionIndex ? "suggestion selected" : "suggestion";
            const key = document.createElement("span");
            key.className = "key";
            key.textContent = String(i + 1);
            const word = document.createElement("span");
            word.className = "sinhala";
            word.textContent = s.sinhala;
            const rom = document.createElement("span");
            rom.className = "romanization";
            rom.textContent = s.romanization;
            const bar = document.createElement("span");
            bar.className = "scorebar";
            const fill = document.createElement("span");
            fill.className = "fill";
            fill.style.width = `${s.score}%`;
            fill.title = String(s.score);
            bar.append(fill);
            li.append(key, word, rom, bar);
            return li;
        }));
    }
}
