/**
 * Reader for the whiplab CSV dialect: `#`-prefixed metadata lines, one
 * header row, comma separator, `.` decimal point.  Figures declare the
 * columns they need; anything missing raises a SchemaError naming the
 * offending columns so a wrong input file fails loudly.
 */

export class SchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaError";
  }
}

export interface Table {
  metadata: Record<string, string>;
  columns: string[];
  rows: Record<string, string>[];
}

export function parseCsv(text: string, source = "<input>"): Table {
  const metadata: Record<string, string> = {};
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  let headerIndex = 0;
  for (; headerIndex < lines.length; headerIndex++) {
    const line = lines[headerIndex];
    if (!line.startsWith("#")) break;
    const body = line.replace(/^#\s*/, "");
    const sep = body.indexOf(":");
    if (sep > 0) {
      metadata[body.slice(0, sep).trim()] = body.slice(sep + 1).trim();
    }
  }
  if (headerIndex >= lines.length) {
    throw new SchemaError(`${source}: no header row found`);
  }
  const columns = lines[headerIndex].split(",");
  const rows: Record<string, string>[] = [];
  for (const line of lines.slice(headerIndex + 1)) {
    const cells = line.split(",");
    const row: Record<string, string> = {};
    columns.forEach((name, i) => {
      row[name] = cells[i] ?? "";
    });
    rows.push(row);
  }
  if (rows.length === 0) {
    throw new SchemaError(`${source}: table has a header but no data rows`);
  }
  return { metadata, columns, rows };
}

export function requireColumns(table: Table, needed: string[], source = "<input>"): void {
  const missing = needed.filter((name) => !table.columns.includes(name));
  if (missing.length > 0) {
    throw new SchemaError(
      `${source}: missing column(s) ${missing.join(", ")}; ` +
      `found [${table.columns.join(", ")}]`);
  }
}

export function numericColumn(table: Table, name: string, source = "<input>"): number[] {
  requireColumns(table, [name], source);
  return table.rows.map((row, index) => {
    const value = Number(row[name]);
    if (Number.isNaN(value) && row[name] !== "nan") {
      throw new SchemaError(
        `${source}: row ${index + 1} column ${name} is not numeric: '${row[name]}'`);
    }
    return value;
  });
}

export function okRows(table: Table): Record<string, string>[] {
  if (!table.columns.includes("ok")) return table.rows;
  return table.rows.filter((row) => row.ok === "True" || row.ok === "true");
}
