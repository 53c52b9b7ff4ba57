import type { FinalRecord, Metrics, TaskView, TDLabel } from './types.js';

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

/** status 0 marks a network failure (server unreachable), not an HTTP error. */
export const NETWORK_ERROR = 0;

async function parseError(response: Response): Promise<ApiError> {
  let detail = response.statusText;
  try {
    const body = await response.json();
    if (body && typeof body.detail === 'string') detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, detail);
}

export class ApiClient {
  constructor(
    public baseUrl: string,
    public annotator?: string,
  ) {}

  private headers(): Record<string, string> {
    const out: Record<string, string> = { 'Content-Type': 'application/json' };
    if (this.annotator) out['X-Annotator-Id'] = this.annotator;
    return out;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(`${this.baseUrl}${path}`, {
        headers: this.headers(),
        ...init,
      });
    } catch (err) {
      throw new ApiError(NETWORK_ERROR, `service unreachable: ${String(err)}`);
    }
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  health(): Promise<{ status: string; tasks: number }> {
    return this.request('/health');
  }

  listTasks(params?: { annotator?: string; state?: string }): Promise<TaskView[]> {
    const query = new URLSearchParams();
    const annotator = params?.annotator ?? this.annotator;
    if (annotator) query.set('annotator', annotator);
    if (params?.state) query.set('state', params.state);
    const suffix = query.toString() ? `?${query}` : '';
    return this.request(`/tasks${suffix}`);
  }

  getTask(taskId: string): Promise<TaskView> {
    const query = this.annotator ? `?annotator=${encodeURIComponent(this.annotator)}` : '';
    return this.request(`/tasks/${encodeURIComponent(taskId)}${query}`);
  }

  submitLabel(taskId: string, label: TDLabel, annotator?: string): Promise<TaskView> {
    return this.request(`/tasks/${encodeURIComponent(taskId)}/label`, {
      method: 'POST',
      body: JSON.stringify({ annotator: annotator ?? this.annotator, label }),
    });
  }

  listConflicts(): Promise<TaskView[]> {
    return this.request('/conflicts');
  }

  resolve(taskId: string, label: TDLabel, note: string): Promise<TaskView> {
    return this.request(`/tasks/${encodeURIComponent(taskId)}/resolve`, {
      method: 'POST',
      body: JSON.stringify({ label, note }),
    });
  }

  metrics(phase?: number): Promise<Metrics> {
    const suffix = phase === undefined ? '' : `?phase=${phase}`;
    return this.request(`/metrics${suffix}`);
  }

  finals(): Promise<FinalRecord[]> {
    return this.request('/finals');
  }
}
