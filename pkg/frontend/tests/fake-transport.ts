// Replays recorded wire responses from the real session service. The
// session bookkeeping (history cursor, involution via the parent edge)
// mirrors the documented API contract; every state payload is a verbatim
// recording.

import type { Transport, TransportResponse } from "../src/api.js";
import fixtures from "./fixtures/session-fixtures.json";

interface FakeSession {
  preset: string;
  history: number[];
}

type StatesByPreset = Record<string, Record<string, unknown>>;

export class FakeTransport implements Transport {
  sessions = new Map<string, FakeSession>();

  private counter = 0;

  requests: Array<{ method: string; path: string; body?: unknown }> = [];

  async request(method: string, path: string, body?: unknown): Promise<TransportResponse> {
    this.requests.push({ method, path, body });
    const states = fixtures.states as StatesByPreset;
    if (method === "POST" && path === "/api/session") {
      const preset = (body as { preset?: string }).preset;
      if (preset === undefined || states[preset] === undefined) {
        return { status: 400, body: { error: "unknown preset" } };
      }
      this.counter += 1;
      const id = `fake-${this.counter}`;
      this.sessions.set(id, { preset, history: [] });
      return { status: 200, body: { id, state: states[preset][""] } };
    }
    const match = path.match(/^\/api\/session\/([^/]+)(\/.*)?$/);
    if (match === null) {
      return { status: 404, body: { error: "no route" } };
    }
    const session = this.sessions.get(match[1]);
    if (session === undefined) {
      return { status: 404, body: { error: "unknown session" } };
    }
    const tail = match[2] ?? "";
    const stateFor = (history: number[]): unknown =>
      (fixtures.states as StatesByPreset)[session.preset][history.join(",")];
    if (method === "GET" && tail === "") {
      return { status: 200, body: stateFor(session.history) };
    }
    if (method === "POST" && tail === "/mutate") {
      const k = (body as { k: number }).k;
      const next =
        session.history.length > 0 && session.history[session.history.length - 1] === k
          ? session.history.slice(0, -1)
          : [...session.history, k];
      const state = stateFor(next);
      if (state === undefined) {
        return { status: 500, body: { error: `no recorded state for ${next.join(",")}` } };
      }
      session.history = next;
      return { status: 200, body: state };
    }
    if (method === "POST" && tail === "/undo") {
      if (session.history.length === 0) {
        return { status: 409, body: { error: "already at the initial seed" } };
      }
      session.history = session.history.slice(0, -1);
      return { status: 200, body: stateFor(session.history) };
    }
    if (method === "GET" && tail === "/find-companion") {
      const find = fixtures.findCompanion as Record<string, unknown>;
      return { status: 200, body: find[session.preset] };
    }
    return { status: 404, body: { error: "no route" } };
  }
}

export const recordedFixtures = fixtures;
