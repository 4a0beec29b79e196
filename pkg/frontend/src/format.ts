/** Probability rendering: one decimal percent, e.g. 0.6235294 -> "62.4%". */
export function formatPercent(p: number): string {
  return (Math.round(p * 1000) / 10).toFixed(1) + "%";
}

/** Signed percentage-point delta against a pinned baseline. */
export function formatDelta(current: number, baseline: number): string {
  const points = Math.round((current - baseline) * 1000) / 10;
  const sign = points > 0 ? "+" : points < 0 ? "−" : "±";
  return `${sign}${Math.abs(points).toFixed(1)}`;
}
