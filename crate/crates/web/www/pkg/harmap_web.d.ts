/* tslint:disable */
/* eslint-disable */

export class Probe {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * `(1 - |z|^2) Lambda_f(z)` on a `size x size` raster of `[-1, 1]^2`,
     * row-major from the top, NaN outside the disk.
     */
    bloch_density(size: number): Float64Array;
    /**
     * Per radius: 1 convex, 0 not convex, 2 inconclusive.
     */
    convexity(radii: Float64Array, n: number): Uint8Array;
    /**
     * Images of `|z| = r` for each radius, `n` points each, flattened to x, y pairs.
     */
    curves(radii: Float64Array, n: number): Float64Array;
    constructor(h: Float64Array, g: Float64Array);
    /**
     * Class constants as a JSON object.
     */
    summary(): string;
}

/**
 * Landau radii for the given constants as a JSON object.
 */
export function landau(c: number, alpha: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_probe_free: (a: number, b: number) => void;
    readonly landau: (a: number, b: number) => [number, number, number, number];
    readonly probe_bloch_density: (a: number, b: number) => [number, number];
    readonly probe_convexity: (a: number, b: number, c: number, d: number) => [number, number];
    readonly probe_curves: (a: number, b: number, c: number, d: number) => [number, number];
    readonly probe_new: (a: number, b: number, c: number, d: number) => number;
    readonly probe_summary: (a: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
