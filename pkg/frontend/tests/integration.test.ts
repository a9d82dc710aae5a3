/**
 * End-to-end flow against the real gateway: spawns `python3 -m swabhasha serve`
 * with the bundled lexicon and drives the composer through actual HTTP.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { fileURLToPath } from "node:url";
import path from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { SuggestClient } from "../src/api.js";
import { Composer, DEBOUNCE_MS, type ComposerElements } from "../src/composer.js";

const PORT = 8877;
const BASE = `http://127.0.0.1:${PORT}`;
const REPO_ROOT = path.resolve(path.dirname(fileURLToPath(import.meta.url)), "..", "..");

let server: ChildProcess;

async function waitForHealth(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/api/health`);
      if (resp.ok) return;
    } catch (err) {
      lastError = err;
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error(`gateway did not come up on ${BASE}: ${lastError}`);
}

function elements(): ComposerElements {
  document.body.innerHTML = `
    <input id="i" type="text">
    <ol id="p"></ol>
    <div id="c"></div>
    <p id="n" hidden></p>`;
  return {
    input: document.getElementById("i") as HTMLInputElement,
    panel: document.getElementById("p") as HTMLElement,
    composed: document.getElementById("c") as HTMLElement,
    notice: document.getElementById("n") as HTMLElement,
  };
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "swabhasha", "serve", "--port", String(PORT)], {
    cwd: REPO_ROOT,
    stdio: "ignore",
  });
  await waitForHealth(20_000);
});

afterAll(() => {
  server?.kill();
});

describe("composer against the live gateway", () => {
  it("reports a healthy service with the bundled lexicon", async () => {
    const health = await new SuggestClient(BASE).health();
    expect(health.status).toBe("ok");
    expect(health.lexicon_entries).toBeGreaterThan(190);
  });

  it("typing khmd shows kohomada within 500 ms and selecting appends it", async () => {
    const el = elements();
    new Composer(el, new SuggestClient(BASE), DEBOUNCE_MS);

    const started = Date.now();
    el.input.value = "khmd";
    el.input.dispatchEvent(new Event("input", { bubbles: true }));

    // poll the panel; the budget includes the 150 ms debounce
    let words: string[] = [];
    while (Date.now() - started < 500) {
      words = Array.from(el.panel.querySelectorAll(".sinhala")).map(
        (n) => n.textContent ?? "",
      );
      if (words.length > 0) break;
      await new Promise((r) => setTimeout(r, 10));
    }
    const elapsed = Date.now() - started;

    expect(elapsed).toBeLessThan(500);
    expect(words.length).toBeLessThanOrEqual(5);
    expect(words).toContain("කොහොමද");

    const index = words.indexOf("කොහොමද");
    (el.panel.querySelector(`[data-index='${index}']`) as HTMLElement).click();
    expect(el.composed.textContent).toBe("කොහොමද ");
  });

  it("full message: khmd then amma composes two Sinhala words", async () => {
    const el = elements();
    new Composer(el, new SuggestClient(BASE), 10);

    for (const token of ["khmd", "amma"]) {
      el.input.value = token;
      el.input.dispatchEvent(new Event("input", { bubbles: true }));
      const deadline = Date.now() + 2000;
      while (el.panel.children.length === 0 && Date.now() < deadline) {
        await new Promise((r) => setTimeout(r, 10));
      }
      el.input.dispatchEvent(new KeyboardEvent("keydown", { key: "1", bubbles: true }));
    }
    expect(el.composed.textContent).toBe("කොහොමද අම්මා ");
  });
});
