// View store: mirrors the last server state and serializes interactions.
// One mutation request is in flight per session; later clicks queue behind
// it, and the displayed quantities always come from the API response.

import { SessionApi } from "./api.js";
import type { MatrixObj, SessionState } from "./types.js";

export interface ViewState {
  sessionId: string | null;
  state: SessionState | null;
  selection: number | null;
  error: string | null;
}

export type Listener = (view: ViewState) => void;

export class ExplorerStore {
  private view: ViewState = {
    sessionId: null,
    state: null,
    selection: null,
    error: null,
  };

  private listeners: Listener[] = [];

  private queue: Promise<void> = Promise.resolve();

  constructor(private api: SessionApi) {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  current(): ViewState {
    return this.view;
  }

  private emit(patch: Partial<ViewState>): void {
    this.view = { ...this.view, ...patch };
    for (const listener of this.listeners) {
      listener(this.view);
    }
  }

  /** Serialize server interactions: at most one in flight, the rest queue. */
  private enqueue(task: () => Promise<void>): Promise<void> {
    this.queue = this.queue.then(task, task);
    return this.queue;
  }

  start(init: { preset?: string; B?: MatrixObj }): Promise<void> {
    return this.enqueue(async () => {
      try {
        const created = await this.api.createSession(init);
        this.emit({
          sessionId: created.id,
          state: created.state,
          selection: null,
          error: null,
        });
      } catch (err) {
        this.emit({ sessionId: null, state: null, error: String(err) });
      }
    });
  }

  clickVertex(k: number): Promise<void> {
    return this.enqueue(async () => {
      if (this.view.sessionId === null) {
        return;
      }
      try {
        const state = await this.api.mutate(this.view.sessionId, k);
        this.emit({ state, selection: k, error: null });
      } catch (err) {
        this.emit({ error: String(err) });
      }
    });
  }

  /** Jump to a breadcrumb node: index 0 is the start seed, i the i-th step.
      Implemented with undo replays; a stale index refreshes instead. */
  navigateTo(index: number): Promise<void> {
    return this.enqueue(async () => {
      if (this.view.sessionId === null || this.view.state === null) {
        return;
      }
      const depth = this.view.state.history.length;
      if (index < 0 || index > depth) {
        await this.refreshLocked();
        return;
      }
      try {
        let state = this.view.state;
        for (let i = 0; i < depth - index; i += 1) {
          state = await this.api.undo(this.view.sessionId);
        }
        this.emit({ state, selection: null, error: null });
      } catch (err) {
        this.emit({ error: String(err) });
      }
    });
  }

  refresh(): Promise<void> {
    return this.enqueue(() => this.refreshLocked());
  }

  private async refreshLocked(): Promise<void> {
    if (this.view.sessionId === null) {
      return;
    }
    try {
      const state = await this.api.getState(this.view.sessionId);
      this.emit({ state, error: null });
    } catch (err) {
      this.emit({ error: String(err) });
    }
  }
}
