/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_probe_free: (a: number, b: number) => void;
export const landau: (a: number, b: number) => [number, number, number, number];
export const probe_bloch_density: (a: number, b: number) => [number, number];
export const probe_convexity: (a: number, b: number, c: number, d: number) => [number, number];
export const probe_curves: (a: number, b: number, c: number, d: number) => [number, number];
export const probe_new: (a: number, b: number, c: number, d: number) => number;
export const probe_summary: (a: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
