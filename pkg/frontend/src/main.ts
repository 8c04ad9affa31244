/** Page wiring: task loop, pickers, adjudication view. All state that
 * matters lives in the tested modules; this file only moves it in and out of
 * the DOM. */

import { ApiError, ServiceClient } from "./api.js";
import { HierarchyIndex } from "./hierarchy.js";
import { parseConstrual, validationProblems } from "./notation.js";
import {
  PickerState,
  canSubmit,
  initialPicker,
  markNullFunction,
  notationFor,
  selectChain,
  selectRole,
  submitProblems,
  toggleAdvanced,
  toggleMetaphor,
} from "./picker.js";
import {
  renderChainOptions,
  renderDisagreements,
  renderHints,
  renderProblems,
  renderSentence,
  renderStats,
  renderSuggestions,
  renderTaskHeader,
  renderTree,
} from "./render.js";
import type { LexiconEntryPayload, Stage, TaskPayload } from "./types.js";

const query = new URLSearchParams(window.location.search);
const client = new ServiceClient(query.get("api") ?? "");

let hierarchy: HierarchyIndex;
let picker: PickerState | null = null;
let entry: LexiconEntryPayload | null = null;

const el = (id: string): HTMLElement => {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found;
};

function annotatorId(): string {
  return (el("annotator") as HTMLInputElement).value.trim();
}

function stage(): Stage {
  return (el("stage") as HTMLSelectElement).value as Stage;
}

function banner(message: string, retry?: () => void): void {
  const box = el("banner");
  box.innerHTML = "";
  if (!message) {
    box.classList.add("hidden");
    return;
  }
  box.classList.remove("hidden");
  box.textContent = message;
  if (retry) {
    const button = document.createElement("button");
    button.textContent = "retry";
    button.addEventListener("click", retry);
    box.appendChild(button);
  }
}

// -- annotate view -----------------------------------------------------------

async function loadTask(): Promise<void> {
  const annotator = annotatorId();
  if (!annotator) {
    banner("enter an annotator id first");
    return;
  }
  banner("");
  let task: TaskPayload | null;
  try {
    task = await client.nextTask(annotator, stage());
  } catch (error) {
    banner(`could not fetch a task: ${(error as Error).message}`, loadTask);
    return;
  }
  if (!task) {
    picker = null;
    el("task").innerHTML = `<p class="empty">No tasks left for ${annotator}.</p>`;
    el("picker").innerHTML = "";
    return;
  }
  picker = initialPicker(task);
  entry = await client.lexiconEntry(task.language, task.form).catch(() => null);
  drawTask();
}

function drawTask(): void {
  if (!picker) return;
  const task = picker.task;
  el("task").innerHTML =
    renderTaskHeader(task) +
    renderSentence(task.tokens, task.span) +
    `<h3>Suggestions</h3>` +
    renderSuggestions(task.suggested, -1);
  drawPicker();
  for (const button of el("task").querySelectorAll<HTMLButtonElement>(".suggestion")) {
    button.addEventListener("click", () => {
      if (!picker) return;
      const construal = parseConstrual(button.dataset.notation ?? "");
      picker = selectRole(picker, construal.role, entry);
      picker = selectChain(picker, construal.functions);
      if (construal.metaphoric !== picker.metaphoric) {
        picker = toggleMetaphor(picker);
      }
      drawTask();
    });
  }
}

function drawPicker(): void {
  if (!picker) return;
  const box = el("picker");
  const roleSection =
    `<h3>Scene role</h3>` +
    `<div class="selected-role">${picker.role ?? "—"}</div>` +
    (picker.role ? renderHints(hierarchy, picker.role) : "") +
    renderTree(hierarchy.tree(), hierarchy);
  const functionSection =
    picker.stage === "role-only"
      ? ""
      : `<h3>Function</h3>` +
        renderChainOptions(picker.suggestions, picker.chain) +
        `<div class="chain-now">chain: ${
          picker.chain.length ? picker.chain.join(" ~> ") : picker.explicitNull ? "(null)" : "—"
        }</div>` +
        `<label><input type="checkbox" id="advanced" ${picker.advanced ? "checked" : ""}/>` +
        ` chain entry (multiple construal)</label>` +
        `<button id="null-function">null function</button>`;
  const metaSection =
    `<label><input type="checkbox" id="metaphor" ${picker.metaphoric ? "checked" : ""}/>` +
    ` metaphoric (role = target domain, function = source domain)</label>`;
  const problems = submitProblems(picker, hierarchy);
  box.innerHTML =
    roleSection +
    functionSection +
    metaSection +
    renderProblems(problems) +
    `<button id="submit" ${problems.length ? "disabled" : ""}>submit</button>`;

  for (const button of box.querySelectorAll<HTMLButtonElement>(".label")) {
    button.addEventListener("click", () => {
      if (!picker) return;
      const label = button.dataset.label ?? "";
      if (picker.role === null || picker.stage === "role-only" || !picker.advanced) {
        picker = selectRole(picker, label, entry);
      } else {
        picker = selectChain(picker, [...picker.chain, label]);
      }
      drawPicker();
    });
  }
  for (const button of box.querySelectorAll<HTMLButtonElement>(".chain")) {
    button.addEventListener("click", () => {
      if (!picker) return;
      const value = button.dataset.chain ?? "";
      picker = selectChain(picker, value ? value.split("~>") : []);
      drawPicker();
    });
  }
  box.querySelector("#null-function")?.addEventListener("click", () => {
    if (!picker) return;
    picker = markNullFunction(picker);
    drawPicker();
  });
  box.querySelector("#metaphor")?.addEventListener("change", () => {
    if (!picker) return;
    picker = toggleMetaphor(picker);
    drawPicker();
  });
  box.querySelector("#advanced")?.addEventListener("change", () => {
    if (!picker) return;
    picker = toggleAdvanced(picker);
    drawPicker();
  });
  box.querySelector("#submit")?.addEventListener("click", submitCurrent);
}

async function submitCurrent(): Promise<void> {
  if (!picker || !canSubmit(picker, hierarchy)) {
    return;
  }
  try {
    await client.submit({
      task_id: picker.task.task_id,
      annotator: annotatorId(),
      construal: notationFor(picker),
    });
  } catch (error) {
    if (error instanceof ApiError && error.status === 409) {
      banner("task was closed elsewhere; fetching a fresh one", loadTask);
      return;
    }
    banner(`submission rejected: ${(error as Error).message}`);
    return;
  }
  await loadTask();
}

// -- adjudication view ---------------------------------------------------------

async function loadDisagreements(): Promise<void> {
  banner("");
  try {
    const items = await client.disagreements();
    el("disagreements").innerHTML = renderDisagreements(items);
    for (const button of el("disagreements").querySelectorAll<HTMLButtonElement>(".adopt")) {
      button.addEventListener("click", () =>
        postAdjudication(items[Number(button.dataset.item)]!, button.dataset.construal ?? ""),
      );
    }
    for (const button of el("disagreements").querySelectorAll<HTMLButtonElement>(".compose-post")) {
      button.addEventListener("click", () => {
        const input = el("disagreements").querySelector<HTMLInputElement>(
          `.compose-input[data-item="${button.dataset.item}"]`,
        );
        postAdjudication(items[Number(button.dataset.item)]!, input?.value ?? "");
      });
    }
  } catch (error) {
    banner(`could not fetch disagreements: ${(error as Error).message}`, loadDisagreements);
  }
}

async function postAdjudication(
  item: { doc_id: string; sent_id: string; span: [number, number] },
  notation: string,
): Promise<void> {
  let problems: string[];
  try {
    problems = validationProblems(parseConstrual(notation), hierarchy.labels());
  } catch (error) {
    banner(`invalid construal: ${(error as Error).message}`);
    return;
  }
  if (problems.length > 0) {
    banner(`invalid construal: ${problems.join("; ")}`);
    return;
  }
  try {
    await client.adjudicate({
      doc_id: item.doc_id,
      sent_id: item.sent_id,
      start: item.span[0],
      end: item.span[1],
      construal: notation,
      expert_id: annotatorId() || "expert",
    });
  } catch (error) {
    if (error instanceof ApiError && error.status === 409) {
      banner("target was adjudicated concurrently; reloading", loadDisagreements);
      return;
    }
    banner(`adjudication rejected: ${(error as Error).message}`);
    return;
  }
  await loadDisagreements();
}

// -- stats + boot -----------------------------------------------------------------

async function loadStats(): Promise<void> {
  try {
    el("stats").innerHTML = renderStats(await client.stats());
  } catch (error) {
    banner(`could not fetch stats: ${(error as Error).message}`, loadStats);
  }
}

function showView(name: "annotate" | "adjudicate" | "stats"): void {
  for (const view of ["annotate", "adjudicate", "stats"] as const) {
    el(`view-${view}`).classList.toggle("hidden", view !== name);
  }
  if (name === "adjudicate") void loadDisagreements();
  if (name === "stats") void loadStats();
}

async function boot(): Promise<void> {
  try {
    hierarchy = new HierarchyIndex(await client.hierarchy());
  } catch (error) {
    banner(`could not load the hierarchy: ${(error as Error).message}`, boot);
    return;
  }
  el("version").textContent = `hierarchy ${hierarchy.version}`;
  el("nav-annotate").addEventListener("click", () => showView("annotate"));
  el("nav-adjudicate").addEventListener("click", () => showView("adjudicate"));
  el("nav-stats").addEventListener("click", () => showView("stats"));
  el("next-task").addEventListener("click", loadTask);
  showView("annotate");
}

void boot();
