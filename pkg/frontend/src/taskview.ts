import type { ScopeKey, TaskView, TDLabel } from './types.js';
import { TD_LABELS } from './types.js';

export const SCOPES: ScopeKey[] = ['2', '10', '20', 'full'];

/** Default scope: two following lines (the context annotators reach for first). */
export const DEFAULT_SCOPE: ScopeKey = '2';

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

/**
 * The function source with the comment's own lines wrapped in <mark>.
 * Highlighting is cosmetic; the label decision never depends on it.
 */
export function highlightFunction(task: TaskView): string {
  const payload = task.payload;
  if (!payload) return '';
  const { function: fn, comment } = payload;
  const lines = fn.body.split('\n');
  const rendered = lines.map((line, i) => {
    const fileLine = fn.start_line + i;
    const safe = escapeHtml(line);
    if (fileLine >= comment.start_line && fileLine <= comment.end_line) {
      return `<mark class="comment-line">${safe}</mark>`;
    }
    return safe;
  });
  return rendered.join('\n');
}

export function renderScopeToggle(active: ScopeKey): string {
  const buttons = SCOPES.map((scope) => {
    const cls = scope === active ? 'scope-btn active' : 'scope-btn';
    const text = scope === 'full' ? 'full function' : `${scope} lines`;
    return `<button class="${cls}" data-scope="${scope}">${text}</button>`;
  });
  return `<div class="scope-toggle">${buttons.join('')}</div>`;
}

export function renderLabelButtons(task: TaskView): string {
  const locked = task.my_label !== null;
  const buttons = TD_LABELS.map((label: TDLabel) => {
    const active = task.my_label === label ? ' active' : '';
    const disabled = locked ? ' disabled' : '';
    return `<button class="label-btn${active}" data-label="${label}"${disabled}>${label}</button>`;
  });
  return `<div class="label-buttons">${buttons.join('')}</div>`;
}

export function renderStateBadge(task: TaskView): string {
  return `<span class="badge state-${task.state.toLowerCase()}">${task.state}</span>`;
}

export function renderTask(task: TaskView, scope: ScopeKey = DEFAULT_SCOPE): string {
  const payload = task.payload;
  const comment = payload ? escapeHtml(payload.comment.raw) : '(comment unavailable)';
  const context = payload ? escapeHtml(payload.contexts[scope] ?? '') : '';
  const fnName = payload ? escapeHtml(payload.function.name) : '';
  return [
    `<article class="task" data-task-id="${task.task_id}">`,
    `<header>${renderStateBadge(task)} <code>${fnName}</code></header>`,
    `<pre class="comment">${comment}</pre>`,
    renderScopeToggle(scope),
    `<pre class="context">${context}</pre>`,
    `<details><summary>full source</summary><pre class="source">${highlightFunction(task)}</pre></details>`,
    renderLabelButtons(task),
    `</article>`,
  ].join('\n');
}
