/* tslint:disable */
/* eslint-disable */

/**
 * The combinatorial code of half-planes drawn in a box, with its canonical form.
 *
 * Input: `{"width": 600, "height": 400, "lines": [[a, b, c], ...]}`.
 */
export function line_code(request: string): string;

/**
 * Local obstructions of a code given in compact notation, e.g. `"∅ 12 13 23"`.
 */
export function obstructions(n: number, code: string): string;

/**
 * The tope graph of a central arrangement or of a covector list.
 *
 * Input: `{"d": 2, "forms": [["1","0"], ...]}` or `{"n": 3, "covectors": [...]}`.
 */
export function tope_graph(request: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly line_code: (a: number, b: number) => [number, number];
    readonly obstructions: (a: number, b: number, c: number) => [number, number];
    readonly tope_graph: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
