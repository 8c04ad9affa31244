/** Pure state machine behind the role/function pickers. The submit gate
 * mirrors the server's validation, so the client can never send a construal
 * the core validator would reject. */

import type { HierarchyIndex } from "./hierarchy.js";
import type { Construal } from "./notation.js";
import { formatConstrual, validationProblems } from "./notation.js";
import { suggestFunctions } from "./suggest.js";
import type { LexiconEntryPayload, Stage, TaskPayload } from "./types.js";

export interface PickerState {
  task: TaskPayload;
  stage: Stage;
  role: string | null;
  /** Current function chain; [] with explicitNull=true is a deliberate null
   * function, [] with explicitNull=false means "not chosen yet". */
  chain: string[];
  explicitNull: boolean;
  metaphoric: boolean;
  /** Ranked chains for the selected role, best first. */
  suggestions: string[][];
  /** Chain entry beyond one step sits behind this toggle. */
  advanced: boolean;
}

export function initialPicker(task: TaskPayload): PickerState {
  return {
    task,
    stage: task.stage,
    role: null,
    chain: [],
    explicitNull: false,
    metaphoric: false,
    suggestions: [],
    advanced: false,
  };
}

/** Choosing a role re-ranks suggestions and defaults the function chain to
 * the top one (the adposition's function is often deterministic given the
 * role). Role-only tasks never auto-fill a function. */
export function selectRole(
  state: PickerState,
  role: string,
  entry: LexiconEntryPayload | null,
): PickerState {
  const suggestions = suggestFunctions(entry, role);
  const top = state.stage === "role-only" ? [] : suggestions[0] ?? [];
  return {
    ...state,
    role,
    suggestions,
    chain: [...top],
    explicitNull: state.stage !== "role-only" && top.length === 0 && suggestions.length > 0,
  };
}

export function selectChain(state: PickerState, chain: string[]): PickerState {
  return { ...state, chain: [...chain], explicitNull: chain.length === 0 };
}

export function appendFunction(state: PickerState, label: string): PickerState {
  if (!state.advanced && state.chain.length >= 1) {
    return { ...state, chain: [label], explicitNull: false };
  }
  return { ...state, chain: [...state.chain, label], explicitNull: false };
}

export function markNullFunction(state: PickerState): PickerState {
  return { ...state, chain: [], explicitNull: true };
}

export function toggleMetaphor(state: PickerState): PickerState {
  return { ...state, metaphoric: !state.metaphoric };
}

export function toggleAdvanced(state: PickerState): PickerState {
  return { ...state, advanced: !state.advanced };
}

export function currentConstrual(state: PickerState): Construal | null {
  if (!state.role) {
    return null;
  }
  return { role: state.role, functions: [...state.chain], metaphoric: state.metaphoric };
}

/** Problems that currently block submission; empty list = submit enabled. */
export function submitProblems(state: PickerState, hierarchy: HierarchyIndex): string[] {
  const construal = currentConstrual(state);
  if (!construal) {
    return ["no scene role selected"];
  }
  const problems = validationProblems(construal, hierarchy.labels());
  if (
    state.stage !== "role-only" &&
    construal.functions.length === 0 &&
    !state.explicitNull
  ) {
    problems.push("choose a function or mark it null");
  }
  return problems;
}

export function canSubmit(state: PickerState, hierarchy: HierarchyIndex): boolean {
  return submitProblems(state, hierarchy).length === 0;
}

export function notationFor(state: PickerState): string {
  const construal = currentConstrual(state);
  if (!construal) {
    throw new Error("no construal selected");
  }
  return formatConstrual(construal);
}
