import type { ApiClient } from './api.js';
import type { TaskView, TDLabel } from './types.js';
import { TD_LABELS } from './types.js';
import { escapeHtml } from './taskview.js';

/** Adjudication board: disagreeing label pairs awaiting a consensus. */
export class ConflictBoard {
  conflicts: TaskView[] = [];

  constructor(private api: ApiClient) {}

  async refresh(): Promise<void> {
    this.conflicts = await this.api.listConflicts();
  }

  /** Resolution requires an explicit consensus label. */
  async resolve(taskId: string, label: TDLabel | null, note: string): Promise<TaskView> {
    if (!label) throw new Error('choose a consensus label before resolving');
    const view = await this.api.resolve(taskId, label, note);
    this.conflicts = this.conflicts.filter((c) => c.task_id !== taskId);
    return view;
  }
}

export function renderConflict(task: TaskView): string {
  const labels = task.labels ?? {};
  const sides = Object.entries(labels)
    .map(
      ([annotator, label]) =>
        `<div class="side"><span class="annotator">${escapeHtml(annotator)}</span>` +
        `<span class="their-label">${label ?? '—'}</span></div>`,
    )
    .join('');
  const options = TD_LABELS.map((l) => `<option value="${l}">${l}</option>`).join('');
  return [
    `<article class="conflict" data-task-id="${task.task_id}">`,
    `<div class="sides">${sides}</div>`,
    `<textarea class="note" placeholder="discussion note"></textarea>`,
    `<select class="consensus"><option value="">choose consensus…</option>${options}</select>`,
    `<button class="resolve-btn">resolve</button>`,
    `</article>`,
  ].join('\n');
}
