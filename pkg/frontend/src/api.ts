// Thin typed client over the session API. All mutation math lives on the
// server; this module only moves JSON.

import type {
  CreatedSession,
  FindCompanionResult,
  MatrixObj,
  SessionState,
} from "./types.js";

export interface TransportResponse {
  status: number;
  body: unknown;
}

export interface Transport {
  request(method: string, path: string, body?: unknown): Promise<TransportResponse>;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

export class HttpTransport implements Transport {
  constructor(
    private baseUrl: string,
    private fetchImpl: typeof fetch = fetch,
  ) {}

  async request(method: string, path: string, body?: unknown): Promise<TransportResponse> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    let parsed: unknown = null;
    const text = await response.text();
    if (text.length > 0) {
      parsed = JSON.parse(text);
    }
    return { status: response.status, body: parsed };
  }
}

function unwrap<T>(response: TransportResponse): T {
  if (response.status >= 400) {
    const detail = response.body as { error?: string; message?: string } | null;
    throw new ApiError(
      response.status,
      detail?.error ?? detail?.message ?? `request failed (${response.status})`,
    );
  }
  return response.body as T;
}

export class SessionApi {
  constructor(private transport: Transport) {}

  async createSession(init: { preset?: string; B?: MatrixObj }): Promise<CreatedSession> {
    return unwrap(await this.transport.request("POST", "/api/session", init));
  }

  async getState(id: string): Promise<SessionState> {
    return unwrap(await this.transport.request("GET", `/api/session/${id}`));
  }

  async mutate(id: string, k: number): Promise<SessionState> {
    return unwrap(await this.transport.request("POST", `/api/session/${id}/mutate`, { k }));
  }

  async undo(id: string): Promise<SessionState> {
    return unwrap(await this.transport.request("POST", `/api/session/${id}/undo`));
  }

  async findCompanion(id: string): Promise<FindCompanionResult> {
    return unwrap(await this.transport.request("GET", `/api/session/${id}/find-companion`));
  }
}
