/**
 * Minimal deterministic SVG output: linear/log scales, nice ticks, and a
 * single panel renderer (frame, axes, series, markers, legend).  All
 * coordinates are emitted with fixed precision so identical inputs yield
 * identical bytes.
 */

export interface Extent {
  min: number;
  max: number;
}

export interface Series {
  label: string;
  color: string;
  points: Array<[number, number]>;
}

export interface Marker {
  x: number;
  y: number;
  label: string;
  color?: string;
}

export interface PanelSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  markers?: Marker[];
  logY?: boolean;
  /** Explicit axis domains; data extent plus padding otherwise. */
  xDomain?: Extent;
  yDomain?: Extent;
  legend?: boolean;
  /** Rows to show instead of one per series (keeps dense panels readable). */
  legendEntries?: Array<{ label: string; color: string }>;
}

export const PANEL_WIDTH = 560;
export const PANEL_HEIGHT = 260;
export const PANEL_MARGIN = { top: 30, right: 16, bottom: 42, left: 68 };
const MARGIN = PANEL_MARGIN;

export function extentOf(values: number[]): Extent {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  if (!(min <= max)) throw new Error("extent of empty data");
  return { min, max };
}

export function padded(extent: Extent, fraction = 0.05): Extent {
  const span = extent.max - extent.min;
  const pad = span > 0 ? span * fraction : Math.max(1, Math.abs(extent.max)) * 0.05;
  return { min: extent.min - pad, max: extent.max + pad };
}

export class Scale {
  private readonly lo: number;
  private readonly hi: number;

  constructor(
    domain: Extent,
    private readonly range: [number, number],
    private readonly log = false,
  ) {
    if (log && !(domain.min > 0)) {
      throw new Error("log scale needs positive values");
    }
    this.lo = log ? Math.log10(domain.min) : domain.min;
    this.hi = log ? Math.log10(domain.max) : domain.max;
    if (this.hi === this.lo) {
      this.lo -= 0.5;
      this.hi += 0.5;
    }
  }

  map(x: number): number {
    const t = ((this.log ? Math.log10(x) : x) - this.lo) / (this.hi - this.lo);
    return this.range[0] + t * (this.range[1] - this.range[0]);
  }
}

/** Round tick positions at a 1/2/5 step, covering the extent. */
export function ticks(extent: Extent, target = 5): number[] {
  const span = extent.max - extent.min;
  if (!(span > 0)) return [extent.min];
  const rawStep = span / target;
  const magnitude = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const ratio = rawStep / magnitude;
  const step = (ratio >= 5 ? 5 : ratio >= 2 ? 2 : 1) * magnitude;
  const out: number[] = [];
  for (let v = Math.ceil(extent.min / step) * step; v <= extent.max + step * 1e-9; v += step) {
    out.push(Number(v.toPrecision(12)));
  }
  return out;
}

/** Decade ticks inside the extent (log axes). */
export function logTicks(extent: Extent): number[] {
  const lo = Math.ceil(Math.log10(extent.min) - 1e-9);
  const hi = Math.floor(Math.log10(extent.max) + 1e-9);
  const out: number[] = [];
  for (let e = lo; e <= hi; e++) out.push(Math.pow(10, e));
  return out.length > 0 ? out : [extent.min];
}

export function fmtNum(v: number): string {
  if (v === 0) return "0";
  const magnitude = Math.abs(v);
  if (magnitude >= 1e4 || magnitude < 1e-3) {
    const exponent = Math.floor(Math.log10(magnitude));
    const mantissa = Number((v / Math.pow(10, exponent)).toPrecision(3));
    return `${mantissa}e${exponent}`;
  }
  return Number(v.toPrecision(6)).toString();
}

const fmt = (x: number): string => x.toFixed(2);

export function escapeText(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function polylineEl(points: Array<[number, number]>, color: string, width = 1.5): string {
  const joined = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return `<polyline fill="none" stroke="${color}" stroke-width="${width}" points="${joined}"/>`;
}

export function circleEl(cx: number, cy: number, r: number, fill: string): string {
  return `<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="${r}" fill="${fill}"/>`;
}

export function lineEl(x1: number, y1: number, x2: number, y2: number, color: string): string {
  return `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${color}" stroke-width="1"/>`;
}

export function textEl(
  x: number,
  y: number,
  content: string,
  opts: { size?: number; anchor?: "start" | "middle" | "end"; rotate?: boolean } = {},
): string {
  const size = opts.size ?? 11;
  const anchor = opts.anchor ?? "start";
  const transform = opts.rotate ? ` transform="rotate(-90 ${fmt(x)} ${fmt(y)})"` : "";
  return (
    `<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" fill="#222"` +
    ` text-anchor="${anchor}"${transform}>${escapeText(content)}</text>`
  );
}

export function renderPanel(spec: PanelSpec): string {
  const plotLeft = MARGIN.left;
  const plotRight = PANEL_WIDTH - MARGIN.right;
  const plotTop = MARGIN.top;
  const plotBottom = PANEL_HEIGHT - MARGIN.bottom;

  const xs: number[] = [];
  const ys: number[] = [];
  for (const s of spec.series) {
    for (const [x, y] of s.points) {
      xs.push(x);
      ys.push(y);
    }
  }
  for (const m of spec.markers ?? []) {
    xs.push(m.x);
    ys.push(m.y);
  }
  const xDomain = spec.xDomain ?? padded(extentOf(xs));
  let yDomain: Extent;
  if (spec.yDomain) {
    yDomain = spec.yDomain;
  } else if (spec.logY) {
    const raw = extentOf(ys);
    yDomain = { min: raw.min / 1.3, max: raw.max * 1.3 };
  } else {
    yDomain = padded(extentOf(ys));
  }

  const x = new Scale(xDomain, [plotLeft, plotRight]);
  const y = new Scale(yDomain, [plotBottom, plotTop], spec.logY ?? false);

  const parts: string[] = [];
  parts.push(
    `<rect x="${plotLeft}" y="${plotTop}" width="${plotRight - plotLeft}"` +
      ` height="${plotBottom - plotTop}" fill="none" stroke="#444" stroke-width="1"/>`,
  );
  parts.push(textEl(plotLeft, plotTop - 10, spec.title, { size: 13 }));

  for (const tick of ticks(xDomain)) {
    const px = x.map(tick);
    if (px < plotLeft - 0.5 || px > plotRight + 0.5) continue;
    parts.push(lineEl(px, plotBottom, px, plotBottom + 4, "#444"));
    parts.push(textEl(px, plotBottom + 16, fmtNum(tick), { anchor: "middle", size: 10 }));
  }
  for (const tick of spec.logY ? logTicks(yDomain) : ticks(yDomain)) {
    const py = y.map(tick);
    if (py < plotTop - 0.5 || py > plotBottom + 0.5) continue;
    parts.push(lineEl(plotLeft - 4, py, plotLeft, py, "#444"));
    parts.push(textEl(plotLeft - 7, py + 3.5, fmtNum(tick), { anchor: "end", size: 10 }));
  }
  parts.push(
    textEl((plotLeft + plotRight) / 2, PANEL_HEIGHT - 10, spec.xLabel, { anchor: "middle" }),
  );
  parts.push(textEl(16, (plotTop + plotBottom) / 2, spec.yLabel, { anchor: "middle", rotate: true }));

  for (const s of spec.series) {
    const mapped = s.points.map(([px, py]): [number, number] => [x.map(px), y.map(py)]);
    if (mapped.length === 1) {
      parts.push(circleEl(mapped[0][0], mapped[0][1], 2.5, s.color));
    } else {
      parts.push(polylineEl(mapped, s.color));
    }
  }

  for (const m of spec.markers ?? []) {
    const mx = x.map(m.x);
    const my = y.map(m.y);
    parts.push(circleEl(mx, my, 3.5, m.color ?? "#000"));
    const anchor = mx > (plotLeft + plotRight) / 2 ? "end" : "start";
    const dx = anchor === "end" ? -6 : 6;
    parts.push(textEl(mx + dx, my - 6, m.label, { anchor, size: 10 }));
  }

  if (spec.legend ?? true) {
    const entries = spec.legendEntries ?? spec.series;
    let row = 0;
    for (const entry of entries) {
      const ly = plotTop + 12 + row * 14;
      const lx = plotRight - 120;
      parts.push(lineEl(lx, ly - 3.5, lx + 16, ly - 3.5, entry.color));
      parts.push(textEl(lx + 21, ly, entry.label, { size: 10 }));
      row += 1;
    }
  }

  return parts.join("\n");
}

export function svgDocument(panels: string[]): string {
  const height = PANEL_HEIGHT * panels.length;
  const groups = panels.map(
    (body, i) => `<g transform="translate(0 ${i * PANEL_HEIGHT})">\n${body}\n</g>`,
  );
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${PANEL_WIDTH}" height="${height}"` +
    ` viewBox="0 0 ${PANEL_WIDTH} ${height}" font-family="Helvetica, Arial, sans-serif">\n` +
    `<rect width="${PANEL_WIDTH}" height="${height}" fill="white"/>\n` +
    `${groups.join("\n")}\n</svg>\n`
  );
}
