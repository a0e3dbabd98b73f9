import { describe, expect, it } from "vitest";

import { ApiError, SessionApi } from "../src/api.js";
import { FakeTransport } from "./fake-transport.js";

describe("SessionApi", () => {
  it("creates sessions and reads state", async () => {
    const transport = new FakeTransport();
    const api = new SessionApi(transport);
    const created = await api.createSession({ preset: "a3" });
    expect(created.id).toBe("fake-1");
    expect(created.state.history).toEqual([]);
    const state = await api.getState(created.id);
    expect(state).toEqual(created.state);
  });

  it("raises ApiError with the server status", async () => {
    const api = new SessionApi(new FakeTransport());
    await expect(api.getState("nope")).rejects.toThrowError(ApiError);
    await expect(api.getState("nope")).rejects.toMatchObject({ status: 404 });
  });

  it("surfaces undo at root as a 409", async () => {
    const api = new SessionApi(new FakeTransport());
    const created = await api.createSession({ preset: "a3" });
    await expect(api.undo(created.id)).rejects.toMatchObject({ status: 409 });
  });

  it("fetches the existence decision", async () => {
    const api = new SessionApi(new FakeTransport());
    const created = await api.createSession({ preset: "k4" });
    const result = await api.findCompanion(created.id);
    expect(result.found).toBe(false);
    expect(result.certificate?.cycles).toHaveLength(4);
  });
});
