import { describe, expect, it } from "vitest";

import { SessionApi } from "../src/api.js";
import { renderPage } from "../src/render.js";
import { ExplorerStore } from "../src/store.js";
import { FakeTransport, recordedFixtures } from "./fake-transport.js";

function makeStore(): { store: ExplorerStore; transport: FakeTransport } {
  const transport = new FakeTransport();
  const store = new ExplorerStore(new SessionApi(transport));
  return { store, transport };
}

describe("ExplorerStore", () => {
  it("UI conformance: clicking vertex 2 on a3 shows exactly the cut {2,3}", async () => {
    const { store } = makeStore();
    await store.start({ preset: "a3" });
    const initial = renderPage(store.current());
    await store.clickVertex(2);
    const view = store.current();
    // the displayed cut is exactly {{2, 3}} and matches the CLI output
    expect(view.state?.cut).toEqual([[2, 3]]);
    expect(view.state?.cut).toEqual(recordedFixtures.cliCutA3AfterK2);
    const mutated = renderPage(view);
    expect(mutated).toContain('data-edge="2-3"');
    expect(mutated).toMatch(/class="edge cut-edge" data-edge="2-3"/);
    // clicking the same vertex again restores the initial display
    await store.clickVertex(2);
    expect(store.current().state?.history).toEqual([]);
    expect(renderPage({ ...store.current(), selection: null })).toBe(initial);
  });

  it("mirrors the server state without recomputation", async () => {
    const { store } = makeStore();
    await store.start({ preset: "a3" });
    await store.clickVertex(2);
    const view = store.current();
    expect(view.state).toEqual(
      (recordedFixtures.states as Record<string, Record<string, unknown>>).a3["2"],
    );
  });

  it("queues rapid clicks and applies them in order", async () => {
    const { store, transport } = makeStore();
    await store.start({ preset: "a3" });
    const first = store.clickVertex(2);
    const second = store.clickVertex(1);
    await Promise.all([first, second]);
    expect(store.current().state?.history).toEqual([2, 1]);
    const mutations = transport.requests.filter((r) => r.path.endsWith("/mutate"));
    expect(mutations.map((r) => (r.body as { k: number }).k)).toEqual([2, 1]);
  });

  it("navigates the breadcrumb with undo replays", async () => {
    const { store, transport } = makeStore();
    await store.start({ preset: "a3" });
    await store.clickVertex(2);
    await store.clickVertex(1);
    await store.navigateTo(1); // back to the state after the first step
    expect(store.current().state?.history).toEqual([2]);
    const undos = transport.requests.filter((r) => r.path.endsWith("/undo"));
    expect(undos).toHaveLength(1);
    await store.navigateTo(0);
    expect(store.current().state?.history).toEqual([]);
  });

  it("refreshes on a stale breadcrumb index", async () => {
    const { store, transport } = makeStore();
    await store.start({ preset: "a3" });
    await store.clickVertex(2);
    await store.navigateTo(5);
    expect(store.current().state?.history).toEqual([2]);
    const reads = transport.requests.filter(
      (r) => r.method === "GET" && /\/api\/session\/[^/]+$/.test(r.path),
    );
    expect(reads.length).toBeGreaterThan(0);
  });

  it("shows the obstruction badge for k4 and re-evaluates after mutation", async () => {
    const { store } = makeStore();
    await store.start({ preset: "k4" });
    expect(store.current().state?.admissible).toBe(false);
    expect(renderPage(store.current())).toContain("no admissible companion");
    await store.clickVertex(1);
    expect(store.current().state?.history).toEqual([1]);
    // the badge reflects the new matrix, whatever the server decided
    const badge = renderPage(store.current());
    expect(badge).toMatch(/class="badge (ok|obstruction|warn)"/);
  });

  it("surfaces transport failures as a banner instead of crashing", async () => {
    const transport = new FakeTransport();
    const failing = {
      request: async (method: string, path: string, body?: unknown) => {
        if (path.endsWith("/mutate")) {
          return { status: 503, body: { error: "backend gone" } };
        }
        return transport.request(method, path, body);
      },
    };
    const store = new ExplorerStore(new SessionApi(failing));
    await store.start({ preset: "a3" });
    await store.clickVertex(2);
    expect(store.current().error).toContain("backend gone");
    expect(renderPage(store.current())).toContain("session unavailable");
  });
});
