/** Hand-rolled SVG charts. Every datum carries its exact API value in
 * data-* attributes; bar geometry is presentation only. */

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const WIDTH = 640;
const HEIGHT = 160;
const GAP = 2;

/** Year bar chart for count histograms. */
export function barChart(entries: Record<string, number>, name: string): string {
  const years = Object.keys(entries).sort();
  if (years.length === 0) return `<p class="empty" data-chart="${esc(name)}">no data</p>`;
  const max = Math.max(...years.map((y) => entries[y]));
  const barWidth = Math.max(4, Math.floor(WIDTH / years.length) - GAP);
  const bars = years
    .map((year, i) => {
      const value = entries[year];
      const h = max > 0 ? Math.max(1, Math.round((value / max) * (HEIGHT - 30))) : 1;
      const x = i * (barWidth + GAP);
      return (
        `<g class="bar" data-year="${esc(year)}" data-count="${esc(String(value))}">` +
        `<rect x="${x}" y="${HEIGHT - 20 - h}" width="${barWidth}" height="${h}">` +
        `<title>${esc(year)}: ${esc(String(value))}</title></rect>` +
        `<text x="${x + barWidth / 2}" y="${HEIGHT - 6}" class="tick">${esc(year.slice(-2))}</text>` +
        `</g>`
      );
    })
    .join("");
  return (
    `<svg class="chart" data-chart="${esc(name)}" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
    `xmlns="http://www.w3.org/2000/svg">${bars}</svg>`
  );
}

/** Line chart for relative-frequency trends; exact values in data-value. */
export function lineChart(values: Record<string, number>, name: string): string {
  const years = Object.keys(values).sort();
  if (years.length === 0) return `<p class="empty" data-chart="${esc(name)}">no data</p>`;
  const max = Math.max(...years.map((y) => values[y]), 1e-12);
  const step = WIDTH / Math.max(years.length - 1, 1);
  const points: string[] = [];
  const markers = years
    .map((year, i) => {
      const value = values[year];
      const x = i * step;
      const y = HEIGHT - 20 - (value / max) * (HEIGHT - 30);
      points.push(`${x.toFixed(1)},${y.toFixed(1)}`);
      return (
        `<circle class="pt" data-year="${esc(year)}" data-value="${esc(String(value))}" ` +
        `cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="3">` +
        `<title>${esc(year)}: ${esc(String(value))}</title></circle>`
      );
    })
    .join("");
  return (
    `<svg class="chart" data-chart="${esc(name)}" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
    `xmlns="http://www.w3.org/2000/svg">` +
    `<polyline fill="none" points="${points.join(" ")}"></polyline>${markers}</svg>`
  );
}

/** Horizontal proportion bars for topic weight vectors. */
export function weightBars(
  rows: { label: string; weight: number }[],
  name: string
): string {
  if (rows.length === 0) return `<p class="empty" data-chart="${esc(name)}">no data</p>`;
  const max = Math.max(...rows.map((r) => r.weight));
  const lines = rows
    .map((row) => {
      const pct = max > 0 ? (row.weight / max) * 100 : 0;
      return (
        `<div class="wrow" data-label="${esc(row.label)}" data-weight="${esc(String(row.weight))}">` +
        `<span class="wlabel">${esc(row.label)}</span>` +
        `<span class="wbar" style="width:${pct.toFixed(1)}%"></span>` +
        `<span class="wvalue">${esc(String(row.weight))}</span></div>`
      );
    })
    .join("");
  return `<div class="weights" data-chart="${esc(name)}">${lines}</div>`;
}
