/**
 * Strict reading of the dfflab CSV schemas.
 *
 * Every consumed file is fully numeric with a single header row, so the
 * reader rejects ragged rows and non-numeric cells outright; schema
 * problems surface as SchemaError naming the file, row, and column.
 */
import { readFileSync } from "node:fs";
import Papa from "papaparse";

export class SchemaError extends Error {}

export interface Table {
  path: string;
  columns: string[];
  rows: number[][];
}

export function readTable(path: string): Table {
  const text = readFileSync(path, "utf8").trim();
  if (text === "") {
    throw new SchemaError(`${path}: empty file`);
  }
  const parsed = Papa.parse<string[]>(text, { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new SchemaError(`${path}: ${first.message} (row ${first.row})`);
  }
  const columns = parsed.data[0].map((name) => name.trim());
  const rows: number[][] = [];
  for (let i = 1; i < parsed.data.length; i++) {
    const raw = parsed.data[i];
    if (raw.length !== columns.length) {
      throw new SchemaError(
        `${path}: row ${i + 1} has ${raw.length} cells, header has ${columns.length}`,
      );
    }
    const row: number[] = [];
    for (let c = 0; c < raw.length; c++) {
      const cell = raw[c].trim();
      const value = cell === "" ? NaN : Number(cell);
      if (!Number.isFinite(value)) {
        throw new SchemaError(
          `${path}: row ${i + 1}, column '${columns[c]}': not a number ('${raw[c]}')`,
        );
      }
      row.push(value);
    }
    rows.push(row);
  }
  if (rows.length === 0) {
    throw new SchemaError(`${path}: no data rows`);
  }
  return { path, columns, rows };
}

export function hasColumn(table: Table, name: string): boolean {
  return table.columns.includes(name);
}

/** Index of a named column; SchemaError listing what is actually present. */
export function columnIndex(table: Table, name: string): number {
  const index = table.columns.indexOf(name);
  if (index < 0) {
    throw new SchemaError(
      `${table.path}: missing column '${name}' (found: ${table.columns.join(", ")})`,
    );
  }
  return index;
}

export function column(table: Table, name: string): number[] {
  const index = columnIndex(table, name);
  return table.rows.map((row) => row[index]);
}
