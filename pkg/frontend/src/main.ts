import { SuggestClient } from "./api.js";
import { Composer } from "./composer.js";

function required<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

const client = new SuggestClient("");

new Composer(
  {
    input: required<HTMLInputElement>("token-input"),
    panel: required("suggestion-panel"),
    composed: required("composed-text"),
    notice: required("notice"),
  },
  client,
);

const status = required("service-status");
client
  .health()
  .then((h) => {
    status.textContent = `service ok, ${h.lexicon_entries} words`;
  })
  .catch(() => {
    status.textContent = "service unreachable";
  });
