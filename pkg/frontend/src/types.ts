// Wire types mirroring the session API. Vertex labels are 1-based.

export interface MatrixObj {
  n: number;
  rows: number[][];
}

export interface CycleObj {
  vertices: number[];
  oriented: boolean;
}

export interface EdgeObj {
  from: number;
  to: number;
  weight: number;
}

export interface CompanionObj {
  A: number[][];
  source: string;
}

export interface CertificateObj {
  cycles: CycleObj[];
  parities: number[];
}

export interface SessionState {
  B: MatrixObj;
  c: number[][];
  companion: CompanionObj | null;
  cut: number[][] | null;
  admissible: boolean;
  certificate: CertificateObj | null;
  cycles: CycleObj[];
  history: number[];
  edges: EdgeObj[];
}

export interface CreatedSession {
  id: string;
  state: SessionState;
}

export interface FindCompanionResult {
  found: boolean;
  companion?: { A: number[][] };
  certificate?: CertificateObj;
}
