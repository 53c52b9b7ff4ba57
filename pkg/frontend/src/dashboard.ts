import type { ApiClient } from './api.js';
import type { Metrics } from './types.js';

/**
 * Agreement dashboard. Every displayed number comes straight from
 * GET /metrics; this module does no statistical computation and no
 * rounding, so what you see is byte-for-byte what the server said.
 */
export class MetricsDashboard {
  data: Metrics | null = null;
  phase: number | undefined;

  constructor(private api: ApiClient) {}

  async refresh(phase?: number): Promise<void> {
    this.phase = phase;
    this.data = await this.api.metrics(phase);
  }

  render(): string {
    const m = this.data;
    if (!m || m.n_items === 0) {
      return `<section class="dashboard empty">no data</section>`;
    }
    const rows = [
      `<dt>items</dt><dd>${String(m.n_items)}</dd>`,
      `<dt>raw agreement</dt><dd class="raw">${String(m.raw_agreement)}</dd>`,
      `<dt>kappa</dt><dd class="kappa">${m.kappa === null ? 'n/a' : String(m.kappa)}</dd>`,
      `<dt>strength</dt><dd class="band">${m.band ?? 'n/a'}</dd>`,
    ];
    const phases = Object.entries(m.per_phase ?? {})
      .map(
        ([phase, p]) =>
          `<tr><td>${phase}</td><td>${String(p.n_items)}</td>` +
          `<td>${String(p.raw_agreement)}</td>` +
          `<td>${p.kappa === null ? 'n/a' : String(p.kappa)}</td>` +
          `<td>${p.band ?? 'n/a'}</td></tr>`,
      )
      .join('');
    return [
      `<section class="dashboard">`,
      `<dl>${rows.join('')}</dl>`,
      `<table class="phases"><thead><tr><th>phase</th><th>items</th><th>raw</th><th>kappa</th><th>band</th></tr></thead>`,
      `<tbody>${phases}</tbody></table>`,
      `</section>`,
    ].join('\n');
  }
}
