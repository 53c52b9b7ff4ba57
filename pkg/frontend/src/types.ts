// Payload shapes of the annotation service API. These mirror the server's
// JSON exactly; the UI never derives or recomputes any of the numbers.

export type TaskState = 'ASSIGNED' | 'PARTIAL' | 'AGREED' | 'CONFLICT' | 'AUDITED';

export const TD_LABELS = [
  'DESIGN',
  'IMPLEMENTATION',
  'DEFECT',
  'TEST',
  'DOCUMENTATION',
  'NON_SATD',
] as const;

export type TDLabel = (typeof TD_LABELS)[number];

export interface CommentInfo {
  id: string;
  raw: string;
  clean: string;
  start_line: number;
  end_line: number;
  kind: 'line' | 'block';
  position: 'leading' | 'inner';
}

export interface FunctionInfo {
  id: string;
  name: string;
  signature: string;
  repo: string;
  path: string;
  start_line: number;
  end_line: number;
  body: string;
}

export type ScopeKey = '2' | '10' | '20' | 'full';

export interface TaskPayload {
  comment: CommentInfo;
  function: FunctionInfo;
  contexts: Record<ScopeKey, string>;
}

export interface TaskView {
  task_id: string;
  comment_id: string;
  state: TaskState;
  phase: number;
  annotators: string[];
  my_label: TDLabel | null;
  labels: Record<string, TDLabel | null> | null;
  final_label: TDLabel | null;
  audit_note: string | null;
  payload?: TaskPayload;
}

export interface PhaseMetrics {
  n_items: number;
  raw_agreement: number;
  kappa: number | null;
  band: string | null;
}

export interface Metrics {
  n_items: number;
  raw_agreement: number | null;
  kappa: number | null;
  band: string | null;
  degenerate?: boolean;
  per_phase?: Record<string, PhaseMetrics>;
}

export interface FinalRecord {
  comment_id: string;
  final_label: TDLabel;
  provenance: {
    task_id: string;
    state: TaskState;
    phase: number;
    annotators: string[];
    original_labels: (TDLabel | null)[];
    audit_note: string | null;
  };
}
