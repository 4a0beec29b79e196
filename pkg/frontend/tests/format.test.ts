import { describe, expect, it } from "vitest";

import { formatDelta, formatPercent } from "../src/format.js";

describe("formatPercent", () => {
  it("renders one decimal place", () => {
    expect(formatPercent(0.6235294117647059)).toBe("62.4%");
    expect(formatPercent(0.22)).toBe("22.0%");
    expect(formatPercent(1.0)).toBe("100.0%");
    expect(formatPercent(0.0)).toBe("0.0%");
  });

  it("rounds to the nearest tenth of a percent", () => {
    expect(formatPercent(0.12345)).toBe("12.3%");
    expect(formatPercent(0.12351)).toBe("12.4%");
  });

  it("keeps per-node sums within rendering rounding", () => {
    const distributions = [
      [0.6235294117647059, 0.3764705882352941],
      [1 / 3, 2 / 3],
      [0.005, 0.995],
    ];
    for (const dist of distributions) {
      const displayed = dist.map((p) => parseFloat(formatPercent(p)));
      const sum = displayed.reduce((a, b) => a + b, 0);
      expect(Math.abs(sum - 100)).toBeLessThanOrEqual(0.1 * dist.length);
    }
  });
});

describe("formatDelta", () => {
  it("signs percentage-point differences", () => {
    expect(formatDelta(0.75, 0.5)).toBe("+25.0");
    expect(formatDelta(0.5, 0.75)).toBe("−25.0");
    expect(formatDelta(0.4, 0.4)).toBe("±0.0");
  });
});
