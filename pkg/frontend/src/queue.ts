import { ApiError, NETWORK_ERROR, type ApiClient } from './api.js';
import type { TaskView, TDLabel } from './types.js';

export interface PendingSubmission {
  taskId: string;
  label: TDLabel;
}

export interface QueueEvents {
  onToast?: (message: string) => void;
}

/**
 * View-model of an annotator's work queue.
 *
 * Open tasks are the ASSIGNED/PARTIAL ones where this annotator's slot is
 * still empty. Refresh failures keep the previous task list (retry banner,
 * no data loss); submissions update optimistically, de-duplicate rapid
 * clicks, and fall into a visible pending queue while the service is
 * unreachable, flushing on reconnect.
 */
export class TaskQueue {
  tasks: TaskView[] = [];
  pending: PendingSubmission[] = [];
  offline = false;
  pageSize: number;

  private inflight = new Map<string, Promise<TaskView | null>>();

  constructor(
    private api: ApiClient,
    public annotator: string,
    private events: QueueEvents = {},
    pageSize = 20,
  ) {
    this.pageSize = pageSize;
  }

  async refresh(): Promise<void> {
    try {
      this.tasks = await this.api.listTasks({ annotator: this.annotator });
      this.offline = false;
    } catch (err) {
      if (err instanceof ApiError && err.status === NETWORK_ERROR) {
        this.offline = true; // previous tasks stay on screen
        return;
      }
      throw err;
    }
  }

  /** Tasks still waiting for this annotator's label. */
  openTasks(): TaskView[] {
    return this.tasks.filter(
      (t) =>
        (t.state === 'ASSIGNED' || t.state === 'PARTIAL') &&
        t.my_label === null &&
        !this.isPending(t.task_id),
    );
  }

  page(index: number): TaskView[] {
    const open = this.openTasks();
    return open.slice(index * this.pageSize, (index + 1) * this.pageSize);
  }

  pageCount(): number {
    return Math.max(1, Math.ceil(this.openTasks().length / this.pageSize));
  }

  isPending(taskId: string): boolean {
    return this.pending.some((p) => p.taskId === taskId);
  }

  private applyServerView(view: TaskView): void {
    const i = this.tasks.findIndex((t) => t.task_id === view.task_id);
    if (i >= 0) this.tasks[i] = { ...this.tasks[i], ...view };
  }

  /**
   * Submit a label. A second click while the first request is in flight
   * returns the same promise instead of firing another request.
   */
  submit(taskId: string, label: TDLabel): Promise<TaskView | null> {
    const running = this.inflight.get(taskId);
    if (running) return running;
    const promise = this.doSubmit(taskId, label).finally(() => {
      this.inflight.delete(taskId);
    });
    this.inflight.set(taskId, promise);
    return promise;
  }

  private async doSubmit(taskId: string, label: TDLabel): Promise<TaskView | null> {
    const task = this.tasks.find((t) => t.task_id === taskId);
    const before = task ? { ...task } : undefined;
    if (task) {
      task.my_label = label; // optimistic; reconciled below
      if (task.state === 'ASSIGNED') task.state = 'PARTIAL';
    }
    try {
      const view = await this.api.submitLabel(taskId, label, this.annotator);
      this.applyServerView(view);
      return view;
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      if (err.status === NETWORK_ERROR) {
        // visible pending state, flushed on reconnect; optimistic view stays
        this.offline = true;
        if (!this.isPending(taskId)) this.pending.push({ taskId, label });
        return null;
      }
      if (task && before) Object.assign(task, before); // roll back
      if (err.status === 409) {
        this.events.onToast?.(`submission rejected: ${err.detail}`);
        try {
          this.applyServerView(await this.api.getTask(taskId));
        } catch {
          // refresh is best-effort; the rollback already restored the view
        }
        return null;
      }
      if (err.status === 403) {
        this.events.onToast?.(`not your task: ${err.detail}`);
        return null;
      }
      throw err;
    }
  }

  /** Retry queued submissions (call when connectivity returns). */
  async flushPending(): Promise<void> {
    const queued = [...this.pending];
    this.pending = [];
    for (const item of queued) {
      await this.submit(item.taskId, item.label);
    }
    if (!this.pending.length) this.offline = false;
  }
}
