import { describe, expect, it } from "vitest";

import { renderBadge, renderBreadcrumb, renderCVectors, renderSvg } from "../src/render.js";
import type { SessionState } from "../src/types.js";
import { recordedFixtures } from "./fake-transport.js";

const states = recordedFixtures.states as Record<string, Record<string, SessionState>>;

describe("renderSvg", () => {
  it("draws one vertex group per vertex and one line per edge", () => {
    const state = states.a3[""];
    const svg = renderSvg(state, null);
    expect(svg.match(/data-vertex=/g)).toHaveLength(3);
    expect(svg.match(/<line /g)).toHaveLength(state.edges.length);
    expect(svg).not.toContain("cut-edge");
  });

  it("highlights cut edges distinctly", () => {
    const svg = renderSvg(states.a3["2"], null);
    expect(svg).toMatch(/class="edge cut-edge" data-edge="2-3"/);
    expect(svg.match(/cut-edge/g)).toHaveLength(1);
  });

  it("labels non-unit weights", () => {
    const state: SessionState = {
      ...states.a3[""],
      edges: [{ from: 1, to: 2, weight: 4 }],
    };
    const svg = renderSvg(state, null);
    expect(svg).toContain('class="weight"');
    expect(svg).toContain(">4</text>");
  });

  it("marks the selected vertex", () => {
    const svg = renderSvg(states.a3[""], 2);
    expect(svg).toContain('class="vertex selected" data-vertex="2"');
  });
});

describe("renderCVectors", () => {
  it("sign-codes the vectors", () => {
    const html = renderCVectors(states.a3["2"]);
    expect(html).toContain('class="cvec plus"');
    expect(html).toContain('class="cvec minus"');
    expect(html).toContain("(1, 1, 0)");
    expect(html).toContain("(0, -1, 0)");
  });
});

describe("renderBadge", () => {
  it("shows the obstruction for k4", () => {
    expect(renderBadge(states.k4[""])).toContain("no admissible companion");
  });

  it("shows the cut when admissible", () => {
    expect(renderBadge(states.a3["2"])).toContain("{2,3}");
  });
});

describe("renderBreadcrumb", () => {
  it("renders start plus one crumb per step", () => {
    const html = renderBreadcrumb([2, 1]);
    expect(html.match(/data-crumb=/g)).toHaveLength(3);
    expect(html).toContain('data-crumb="0"');
    expect(html).toContain('data-crumb="2"');
  });
});
