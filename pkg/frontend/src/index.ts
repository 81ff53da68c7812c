import { Table } from "./csv.js";
import { render as cusp } from "./figures/cusp.js";
import { render as spectrum } from "./figures/spectrum.js";
import { render as order } from "./figures/order.js";
import { render as wala } from "./figures/wala.js";
import { render as vqe } from "./figures/vqe.js";
import { render as scaling } from "./figures/scaling.js";
import { render as truncation } from "./figures/truncation.js";

export { SchemaError, Table, parseCsv, requireColumns } from "./csv.js";

export const FIGURES: Record<string, (inputs: Table[]) => string> = {
  cusp, spectrum, order, wala, vqe, scaling, truncation,
};
