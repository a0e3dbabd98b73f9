// DOM wiring: preset picker, text-paste import, click-to-mutate.

import { HttpTransport, SessionApi } from "./api.js";
import { renderPage } from "./render.js";
import { ExplorerStore } from "./store.js";
import type { MatrixObj } from "./types.js";

const PRESETS = ["a2", "a3", "a4", "a5", "d4", "c3", "k4", "markov", "b2"];

function parseMatrixText(text: string): MatrixObj {
  const lines = text
    .split("\n")
    .map((ln) => ln.trim())
    .filter((ln) => ln.length > 0);
  if (lines.length === 0) {
    throw new Error("empty matrix");
  }
  const n = Number(lines[0]);
  if (!Number.isInteger(n) || n <= 0 || lines.length !== n + 1) {
    throw new Error("first line must be n, followed by n rows");
  }
  const rows = lines.slice(1).map((ln) => ln.split(/\s+/).map(Number));
  if (rows.some((row) => row.length !== n || row.some((x) => !Number.isInteger(x)))) {
    throw new Error("rows must hold n integers each");
  }
  return { n, rows };
}

export function mount(root: HTMLElement): void {
  const params = new URLSearchParams(window.location.search);
  const base = params.get("api") ?? "http://127.0.0.1:8175";
  const api = new SessionApi(new HttpTransport(base));
  const store = new ExplorerStore(api);

  root.innerHTML = `
    <header>
      <h1>quiver mutation explorer</h1>
      <label>preset
        <select id="preset">
          ${PRESETS.map((p) => `<option value="${p}">${p}</option>`).join("")}
        </select>
      </label>
      <button id="new-session">new session</button>
      <details>
        <summary>paste a matrix</summary>
        <textarea id="paste" rows="6" cols="24" placeholder="n\nrow 1\n..."></textarea>
        <button id="import">import</button>
      </details>
    </header>
    <main id="view"></main>
    <p class="hint">click a vertex to mutate there; click it again to undo.</p>
  `;

  const view = root.querySelector<HTMLElement>("#view")!;
  store.onChange((v) => {
    view.innerHTML = renderPage(v);
  });

  root.querySelector<HTMLButtonElement>("#new-session")!.addEventListener("click", () => {
    const preset = root.querySelector<HTMLSelectElement>("#preset")!.value;
    void store.start({ preset });
  });

  root.querySelector<HTMLButtonElement>("#import")!.addEventListener("click", () => {
    const text = root.querySelector<HTMLTextAreaElement>("#paste")!.value;
    try {
      void store.start({ B: parseMatrixText(text) });
    } catch (err) {
      view.innerHTML = `<div class="banner error">${String(err)}</div>`;
    }
  });

  view.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const vertex = target.closest<HTMLElement>("[data-vertex]");
    if (vertex !== null) {
      void store.clickVertex(Number(vertex.dataset.vertex));
      return;
    }
    const crumb = target.closest<HTMLElement>("[data-crumb]");
    if (crumb !== null) {
      void store.navigateTo(Number(crumb.dataset.crumb));
    }
  });

  void store.start({ preset: "a3" });
}

if (typeof document !== "undefined") {
  const root = document.getElementById("app");
  if (root !== null) {
    mount(root);
  }
}
