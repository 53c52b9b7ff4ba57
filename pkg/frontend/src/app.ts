// Browser entry point: wires the queue, conflict board and dashboard into
// the page. All state lives in the view-model classes so this file stays a
// thin DOM shim.

import { ApiClient } from './api.js';
import { ConflictBoard, renderConflict } from './conflicts.js';
import { MetricsDashboard } from './dashboard.js';
import { TaskQueue } from './queue.js';
import { DEFAULT_SCOPE, renderTask } from './taskview.js';
import type { ScopeKey, TDLabel } from './types.js';

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function toast(message: string): void {
  const node = el('toast');
  node.textContent = message;
  node.classList.add('visible');
  setTimeout(() => node.classList.remove('visible'), 4000);
}

export async function start(): Promise<void> {
  const params = new URLSearchParams(location.search);
  const annotator = params.get('annotator') ?? 'anonymous';
  const base = params.get('api') ?? `http://${location.hostname}:8765`;
  const api = new ApiClient(base, annotator);
  const queue = new TaskQueue(api, annotator, { onToast: toast });
  const board = new ConflictBoard(api);
  const dashboard = new MetricsDashboard(api);
  let scope: ScopeKey = DEFAULT_SCOPE;
  let page = 0;

  async function renderQueue(): Promise<void> {
    const banner = el('banner');
    banner.textContent = queue.offline ? 'service unreachable — retrying; nothing was lost' : '';
    const open = queue.page(page);
    if (!open.length) {
      el('queue').innerHTML = '<p class="empty">queue is empty</p>';
      return;
    }
    const views = await Promise.all(open.map((t) => api.getTask(t.task_id)));
    el('queue').innerHTML = views.map((v) => renderTask(v, scope)).join('\n');
  }

  async function refreshAll(): Promise<void> {
    await queue.refresh();
    await renderQueue();
    await board.refresh();
    el('conflicts').innerHTML = board.conflicts.map(renderConflict).join('\n') || '<p class="empty">no conflicts</p>';
    await dashboard.refresh();
    el('dashboard').innerHTML = dashboard.render();
  }

  el('queue').addEventListener('click', async (event) => {
    const target = event.target as HTMLElement;
    const taskNode = target.closest('[data-task-id]') as HTMLElement | null;
    if (!taskNode) return;
    const taskId = taskNode.dataset.taskId as string;
    if (target.matches('.label-btn')) {
      await queue.submit(taskId, target.dataset.label as TDLabel);
      await refreshAll();
    }
    if (target.matches('.scope-btn')) {
      scope = target.dataset.scope as ScopeKey;
      await renderQueue();
    }
  });

  el('conflicts').addEventListener('click', async (event) => {
    const target = event.target as HTMLElement;
    if (!target.matches('.resolve-btn')) return;
    const node = target.closest('[data-task-id]') as HTMLElement;
    const label = (node.querySelector('.consensus') as HTMLSelectElement).value as TDLabel | '';
    const note = (node.querySelector('.note') as HTMLTextAreaElement).value;
    try {
      await board.resolve(node.dataset.taskId as string, label || null, note);
      await refreshAll();
    } catch (err) {
      toast(String(err));
    }
  });

  window.addEventListener('online', () => void queue.flushPending().then(refreshAll));
  el('prev').addEventListener('click', () => {
    page = Math.max(0, page - 1);
    void renderQueue();
  });
  el('next').addEventListener('click', () => {
    page = Math.min(queue.pageCount() - 1, page + 1);
    void renderQueue();
  });

  await refreshAll();
  setInterval(() => void refreshAll(), 15000);
}

if (typeof document !== 'undefined' && document.getElementById('queue')) {
  void start();
}
