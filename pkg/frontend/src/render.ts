// Pure string renderers: view state in, SVG/HTML out. No mutation logic
// and no recomputation of server quantities lives here.

import { circularLayout } from "./layout.js";
import type { SessionState } from "./types.js";
import type { ViewState } from "./store.js";

const SIZE = 420;
const NODE_RADIUS = 22;

function scale(p: { x: number; y: number }): { x: number; y: number } {
  const margin = 50;
  const r = SIZE / 2 - margin;
  return { x: SIZE / 2 + r * p.x, y: SIZE / 2 - r * p.y };
}

function cutKey(i: number, j: number): string {
  return i < j ? `${i}-${j}` : `${j}-${i}`;
}

function cutSet(state: SessionState): Set<string> {
  const out = new Set<string>();
  for (const [i, j] of state.cut ?? []) {
    out.add(cutKey(i, j));
  }
  return out;
}

export function renderSvg(state: SessionState, selection: number | null): string {
  const pos = circularLayout(state.B.n).map(scale);
  const cuts = cutSet(state);
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${SIZE} ${SIZE}" class="quiver" role="img">`,
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ` +
      `markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z" fill="context-stroke"/></marker></defs>`,
  );
  for (const edge of state.edges) {
    const a = pos[edge.from - 1];
    const b = pos[edge.to - 1];
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.hypot(dx, dy) || 1;
    const pad = NODE_RADIUS + 4;
    const x1 = a.x + (dx / len) * pad;
    const y1 = a.y + (dy / len) * pad;
    const x2 = b.x - (dx / len) * pad;
    const y2 = b.y - (dy / len) * pad;
    const inCut = cuts.has(cutKey(edge.from, edge.to));
    const cls = inCut ? "edge cut-edge" : "edge";
    parts.push(
      `<line class="${cls}" data-edge="${cutKey(edge.from, edge.to)}" ` +
        `x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" ` +
        `x2="${x2.toFixed(1)}" y2="${y2.toFixed(1)}" marker-end="url(#arrow)"/>`,
    );
    if (edge.weight !== 1) {
      const mx = (x1 + x2) / 2;
      const my = (y1 + y2) / 2;
      parts.push(
        `<text class="weight" x="${mx.toFixed(1)}" y="${my.toFixed(1)}">` +
          `${edge.weight}</text>`,
      );
    }
  }
  for (let v = 1; v <= state.B.n; v += 1) {
    const p = pos[v - 1];
    const selected = selection === v ? " selected" : "";
    parts.push(
      `<g class="vertex${selected}" data-vertex="${v}">` +
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${NODE_RADIUS}"/>` +
        `<text x="${p.x.toFixed(1)}" y="${p.y.toFixed(1)}" dy="5">${v}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderCVectors(state: SessionState): string {
  const items = state.c.map((vec, idx) => {
    const positive = vec.every((x) => x >= 0);
    const cls = positive ? "cvec plus" : "cvec minus";
    return `<li class="${cls}">c<sub>${idx + 1}</sub> = (${vec.join(", ")})</li>`;
  });
  return `<ul class="cvectors">${items.join("")}</ul>`;
}

export function renderBadge(state: SessionState): string {
  if (state.companion !== null && state.admissible) {
    const cut = (state.cut ?? []).map(([i, j]) => `{${i},${j}}`).join(", ");
    return `<div class="badge ok">admissible; cut = {${cut}}</div>`;
  }
  if (state.certificate !== null) {
    const cycles = state.certificate.cycles
      .map((c) => `(${c.vertices.join(",")})`)
      .join(" ");
    return (
      `<div class="badge obstruction">no admissible companion; ` +
      `obstruction cycles ${cycles}</div>`
    );
  }
  return `<div class="badge warn">companion not admissible</div>`;
}

export function renderBreadcrumb(history: number[]): string {
  const crumbs = [`<button class="crumb" data-crumb="0">start</button>`];
  history.forEach((k, idx) => {
    crumbs.push(
      `<button class="crumb" data-crumb="${idx + 1}">&mu;<sub>${k}</sub></button>`,
    );
  });
  return `<nav class="breadcrumb">${crumbs.join(" &rarr; ")}</nav>`;
}

export function renderPage(view: ViewState): string {
  if (view.error !== null) {
    return `<div class="banner error">session unavailable: ${view.error}</div>`;
  }
  if (view.state === null) {
    return `<div class="banner">no session</div>`;
  }
  return [
    renderBreadcrumb(view.state.history),
    renderBadge(view.state),
    renderSvg(view.state, view.selection),
    renderCVectors(view.state),
  ].join("\n");
}
