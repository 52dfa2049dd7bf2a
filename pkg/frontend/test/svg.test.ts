import { describe, expect, it } from "vitest";

import {
  PANEL_HEIGHT,
  PANEL_WIDTH,
  PanelSpec,
  Scale,
  escapeText,
  extentOf,
  fmtNum,
  logTicks,
  padded,
  polylineEl,
  renderPanel,
  svgDocument,
  ticks,
} from "../src/svg.js";

describe("extentOf and padded", () => {
  it("finds min and max", () => {
    expect(extentOf([3, -1, 2])).toEqual({ min: -1, max: 3 });
  });

  it("rejects empty data", () => {
    expect(() => extentOf([])).toThrow(/extent of empty data/);
  });

  it("pads a span by the given fraction", () => {
    const p = padded({ min: 0, max: 10 }, 0.1);
    expect(p.min).toBeCloseTo(-1, 12);
    expect(p.max).toBeCloseTo(11, 12);
  });

  it("still pads a zero span", () => {
    const p = padded({ min: 2, max: 2 });
    expect(p.min).toBeLessThan(2);
    expect(p.max).toBeGreaterThan(2);
  });
});

describe("Scale", () => {
  it("maps linear domain endpoints onto the range", () => {
    const s = new Scale({ min: 0, max: 10 }, [68, 544]);
    expect(s.map(0)).toBe(68);
    expect(s.map(10)).toBe(544);
    expect(s.map(5)).toBe(306);
  });

  it("maps log domains by decade", () => {
    const s = new Scale({ min: 1, max: 100 }, [200, 30], true);
    expect(s.map(1)).toBeCloseTo(200, 10);
    expect(s.map(10)).toBeCloseTo(115, 10);
    expect(s.map(100)).toBeCloseTo(30, 10);
  });

  it("rejects a log domain touching zero or below", () => {
    expect(() => new Scale({ min: 0, max: 1 }, [0, 1], true)).toThrow(
      /log scale needs positive values/,
    );
    expect(() => new Scale({ min: -2, max: 1 }, [0, 1], true)).toThrow(
      /log scale needs positive values/,
    );
  });

  it("widens a degenerate domain instead of dividing by zero", () => {
    const s = new Scale({ min: 2, max: 2 }, [0, 100]);
    expect(s.map(2)).toBe(50);
  });
});

describe("ticks", () => {
  it("uses a 1/2/5 step covering the extent", () => {
    expect(ticks({ min: 0, max: 1 })).toEqual([0, 0.2, 0.4, 0.6, 0.8, 1]);
    expect(ticks({ min: 0, max: 10 })).toEqual([0, 2, 4, 6, 8, 10]);
    expect(ticks({ min: 0, max: 25 })).toEqual([0, 5, 10, 15, 20, 25]);
  });

  it("stays inside the extent for offset ranges", () => {
    for (const extent of [
      { min: 0.73, max: 1.18 },
      { min: -3.3, max: 3.3 },
      { min: 17, max: 123 },
    ]) {
      const t = ticks(extent);
      expect(t.length).toBeGreaterThanOrEqual(3);
      expect(t[0]).toBeGreaterThanOrEqual(extent.min - 1e-9);
      expect(t[t.length - 1]).toBeLessThanOrEqual(extent.max + 1e-9);
      const step = t[1] - t[0];
      for (let i = 2; i < t.length; i++) {
        expect(t[i] - t[i - 1]).toBeCloseTo(step, 9);
      }
    }
  });

  it("degenerates to the single value", () => {
    expect(ticks({ min: 3, max: 3 })).toEqual([3]);
  });
});

describe("logTicks", () => {
  it("emits the decades inside the extent", () => {
    expect(logTicks({ min: 0.5, max: 2000 })).toEqual([1, 10, 100, 1000]);
    expect(logTicks({ min: 1, max: 100 })).toEqual([1, 10, 100]);
  });

  it("falls back to the lower edge when no decade fits", () => {
    expect(logTicks({ min: 2, max: 8 })).toEqual([2]);
  });
});

describe("fmtNum", () => {
  it.each<[number, string]>([
    [0, "0"],
    [1, "1"],
    [0.25, "0.25"],
    [-0.5, "-0.5"],
    [1234.5678, "1234.57"],
    [12345, "1.23e4"],
    [0.00012345, "1.23e-4"],
    [1e-8, "1e-8"],
  ])("formats %d as %s", (value, expected) => {
    expect(fmtNum(value)).toBe(expected);
  });
});

describe("element helpers", () => {
  it("escapes markup characters", () => {
    expect(escapeText("a<b&c>d")).toBe("a&lt;b&amp;c&gt;d");
  });

  it("emits polyline coordinates at fixed precision", () => {
    const el = polylineEl(
      [
        [1.234, 5.678],
        [2, 3],
      ],
      "#abc",
    );
    expect(el).toBe(
      '<polyline fill="none" stroke="#abc" stroke-width="1.5" points="1.23,5.68 2.00,3.00"/>',
    );
  });
});

describe("renderPanel", () => {
  const base: PanelSpec = {
    title: "(x) demo",
    xLabel: "k",
    yLabel: "rho",
    series: [
      {
        label: "one",
        color: "#1f77b4",
        points: [
          [0, 0],
          [1, 1],
        ],
      },
    ],
  };

  it("draws the frame, title, labels, and series", () => {
    const body = renderPanel(base);
    expect(body).toContain('<rect x="68" y="30" width="476" height="188"');
    expect(body).toContain(">(x) demo</text>");
    expect(body).toContain(">k</text>");
    expect(body).toContain(">rho</text>");
    expect(body.match(/<polyline/g)).toHaveLength(1);
  });

  it("renders a lone point as a circle", () => {
    const body = renderPanel({
      ...base,
      series: [{ label: "pt", color: "#000", points: [[0.5, 0.5]] }],
    });
    expect(body).not.toContain("<polyline");
    expect(body).toContain('r="2.5"');
  });

  it("places a marker with its label flipped away from the edge", () => {
    const body = renderPanel({
      ...base,
      xDomain: { min: 0, max: 1 },
      markers: [{ x: 0.9, y: 0.9, label: "peak here" }],
    });
    expect(body).toContain('r="3.5"');
    expect(body).toContain('text-anchor="end">peak here</text>');
  });

  it("omits the legend when asked", () => {
    const body = renderPanel({ ...base, legend: false });
    expect(body).not.toContain(">one</text>");
  });

  it("honors a legend override for dense panels", () => {
    const series = ["a", "b", "c"].map((label, i) => ({
      label,
      color: "#123456",
      points: [
        [i, 0],
        [i + 1, 1],
      ] as Array<[number, number]>,
    }));
    const body = renderPanel({
      ...base,
      series,
      legendEntries: [series[0], series[2]],
    });
    expect(body).toContain(">a</text>");
    expect(body).not.toContain(">b</text>");
    expect(body).toContain(">c</text>");
  });
});

describe("svgDocument", () => {
  it("stacks panels and sizes the canvas", () => {
    const doc = svgDocument(["AAA", "BBB"]);
    expect(doc).toContain(`width="${PANEL_WIDTH}" height="${2 * PANEL_HEIGHT}"`);
    expect(doc).toContain('<g transform="translate(0 0)">');
    expect(doc).toContain(`<g transform="translate(0 ${PANEL_HEIGHT})">`);
    expect(doc).toContain(`<rect width="${PANEL_WIDTH}" height="${2 * PANEL_HEIGHT}" fill="white"/>`);
    expect(doc.endsWith("</svg>\n")).toBe(true);
  });

  it("is deterministic", () => {
    const spec: PanelSpec = {
      title: "t",
      xLabel: "x",
      yLabel: "y",
      series: [
        {
          label: "s",
          color: "#333",
          points: [
            [0.1, 0.2],
            [0.3, 0.4],
          ],
        },
      ],
    };
    expect(svgDocument([renderPanel(spec)])).toBe(svgDocument([renderPanel(spec)]));
  });
});
