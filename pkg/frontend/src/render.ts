/** Pure HTML-string renderers. Keeping these free of DOM access makes the
 * view layer unit-testable; main.ts only wires the strings into the page. */

import type { HierarchyIndex, TreeNode } from "./hierarchy.js";
import type { DisagreementPayload, StatsPayload, TaskPayload } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** The sentence with the target span wrapped in a <mark>. */
export function renderSentence(tokens: string[], span: [number, number]): string {
  const [start, end] = span;
  const parts = tokens.map((token, index) => {
    const safe = escapeHtml(token);
    return index >= start && index < end ? `<mark class="target">${safe}</mark>` : safe;
  });
  return `<p class="sentence">${parts.join(" ")}</p>`;
}

export function renderTaskHeader(task: TaskPayload): string {
  return (
    `<div class="task-meta">` +
    `<span class="form">${escapeHtml(task.form)}</span>` +
    `<span class="muted">${escapeHtml(task.doc_id)}/${escapeHtml(task.sent_id)}` +
    ` · ${escapeHtml(task.language)} · ${escapeHtml(task.stage)}</span>` +
    `</div>`
  );
}

export function renderSuggestions(suggestions: string[], selected: number): string {
  if (suggestions.length === 0) {
    return `<p class="muted">No lexicon suggestions; pick labels from the hierarchy.</p>`;
  }
  const items = suggestions.map((notation, index) => {
    const cls = index === selected ? "suggestion selected" : "suggestion";
    return (
      `<button class="${cls}" data-index="${index}" data-notation="${escapeHtml(notation)}">` +
      `${escapeHtml(notation)}</button>`
    );
  });
  return `<div class="suggestions">${items.join("")}</div>`;
}

/** Ranked function chains for a chosen role; [] renders as the null option. */
export function renderChainOptions(chains: string[][], selected: string[]): string {
  const key = selected.join("~>");
  const items = chains.map((chain) => {
    const label = chain.length === 0 ? "(null function)" : chain.join(" ~> ");
    const value = chain.join("~>");
    const cls = value === key ? "chain selected" : "chain";
    return `<button class="${cls}" data-chain="${escapeHtml(value)}">${escapeHtml(label)}</button>`;
  });
  return `<div class="chains">${items.join("")}</div>`;
}

/** Collapsible DAG browser; labels with two parents appear under each parent
 * with a shared badge. Hints and definitions ride along as tooltips. */
export function renderTree(nodes: TreeNode[], hierarchy: HierarchyIndex): string {
  const renderNode = (node: TreeNode): string => {
    const hints = hierarchy.hints(node.name);
    const tooltip = [hierarchy.definition(node.name), ...hints].filter(Boolean).join(" — ");
    const badge = node.shared ? `<span class="badge" title="multiple parents">shared</span>` : "";
    const label =
      `<button class="label" data-label="${escapeHtml(node.name)}" ` +
      `title="${escapeHtml(tooltip)}">${escapeHtml(node.name)}</button>${badge}`;
    if (node.children.length === 0) {
      return `<li>${label}</li>`;
    }
    const children = node.children.map(renderNode).join("");
    return `<li><details><summary>${label}</summary><ul>${children}</ul></details></li>`;
  };
  return `<ul class="tree">${nodes.map(renderNode).join("")}</ul>`;
}

export function renderHints(hierarchy: HierarchyIndex, label: string): string {
  const hints = hierarchy.hints(label);
  if (hints.length === 0) {
    return "";
  }
  const items = hints.map((hint) => `<li>${escapeHtml(hint)}</li>`).join("");
  return `<ul class="hints">${items}</ul>`;
}

export function renderDisagreements(items: DisagreementPayload[]): string {
  if (items.length === 0) {
    return `<p class="empty">No disagreements awaiting adjudication.</p>`;
  }
  const cards = items.map((item, index) => {
    const sides = item.annotations
      .map(
        (entry) =>
          `<div class="side"><span class="annotator">${escapeHtml(entry.annotator)}</span>` +
          `<code>${escapeHtml(entry.construal)}</code>` +
          `<button class="adopt" data-item="${index}" ` +
          `data-construal="${escapeHtml(entry.construal)}">adopt</button></div>`,
      )
      .join("");
    return (
      `<div class="disagreement" data-item="${index}">` +
      renderSentence(item.tokens, item.span) +
      `<div class="sides">${sides}</div>` +
      `<div class="compose"><input class="compose-input" data-item="${index}" ` +
      `placeholder="Role~&gt;Function" />` +
      `<button class="compose-post" data-item="${index}">post</button></div>` +
      `</div>`
    );
  });
  return cards.join("");
}

export function renderStats(stats: StatsPayload): string {
  const rows: Array<[string, string]> = [
    ["annotated targets", String(stats.tokens_annotated)],
    ["construal mismatch rate", stats.mismatch_rate.toFixed(3)],
    ["null function rate", stats.null_function_rate.toFixed(3)],
    ["role-only labels", stats.role_only_labels.join(", ") || "—"],
    ["function-only labels", stats.function_only_labels.join(", ") || "—"],
  ];
  const body = rows
    .map(([key, value]) => `<tr><th>${escapeHtml(key)}</th><td>${escapeHtml(value)}</td></tr>`)
    .join("");
  return `<table class="stats">${body}</table>`;
}

export function renderProblems(problems: string[]): string {
  if (problems.length === 0) {
    return "";
  }
  const items = problems.map((p) => `<li>${escapeHtml(p)}</li>`).join("");
  return `<ul class="problems">${items}</ul>`;
}
