import assert from "node:assert/strict";
import { test } from "node:test";

import { HierarchyIndex } from "../src/hierarchy.js";
import {
  escapeHtml,
  renderDisagreements,
  renderProblems,
  renderSentence,
  renderSuggestions,
  renderTree,
} from "../src/render.js";
import { MINI_HIERARCHY, SCARED_TASK } from "./fixtures.js";

const hierarchy = new HierarchyIndex(MINI_HIERARCHY);

test("target span is highlighted with a mark element", () => {
  const html = renderSentence(SCARED_TASK.tokens, SCARED_TASK.span);
  assert.match(html, /<mark class="target">about<\/mark>/);
  assert.ok(!html.includes("<mark class=\"target\">scared</mark>"));
});

test("multiword spans highlight every covered token", () => {
  const html = renderSentence(["It", "is", "up", "to", "you", "."], [2, 4]);
  assert.match(html, /<mark class="target">up<\/mark> <mark class="target">to<\/mark>/);
});

test("token text is escaped", () => {
  const html = renderSentence(["<b>", "&", "x"], [0, 1]);
  assert.ok(html.includes("&lt;b&gt;"));
  assert.ok(html.includes("&amp;"));
});

test("suggestions render in served order with data attributes", () => {
  const html = renderSuggestions(SCARED_TASK.suggested, -1);
  const first = html.indexOf("Stimulus~&gt;Topic");
  const second = html.indexOf("Topic~&gt;Topic");
  assert.ok(first >= 0 && second > first);
  assert.match(html, /data-notation="Stimulus~&gt;Topic"/);
});

test("empty suggestion list still leaves pickers usable", () => {
  assert.match(renderSuggestions([], -1), /pick labels from the hierarchy/);
});

test("tree marks shared nodes under each parent", () => {
  const html = renderTree(hierarchy.tree(), hierarchy);
  const occurrences = html.split('data-label="Crossing"').length - 1;
  assert.equal(occurrences, 2);
  assert.match(html, /class="badge"/);
  assert.match(html, /title="[^"]*When\?/);
});

test("disagreements render side by side with adopt buttons", () => {
  const html = renderDisagreements([
    {
      doc_id: "d1",
      sent_id: "s1",
      span: [3, 4],
      form: "about",
      tokens: SCARED_TASK.tokens,
      annotations: [
        { annotator: "alice", construal: "Stimulus~>Topic" },
        { annotator: "bob", construal: "Topic~>Topic" },
      ],
    },
  ]);
  assert.match(html, /alice/);
  assert.match(html, /bob/);
  assert.match(html, /data-construal="Stimulus~&gt;Topic"/);
  assert.match(html, /<mark class="target">about<\/mark>/);
});

test("empty queue renders the no-disagreements state", () => {
  assert.match(renderDisagreements([]), /No disagreements/);
});

test("problem list renders only when there are problems", () => {
  assert.equal(renderProblems([]), "");
  assert.match(renderProblems(["unknown role label 'X'"]), /unknown role label/);
});

test("escapeHtml covers the dangerous characters", () => {
  assert.equal(escapeHtml(`<a href="x">&`), "&lt;a href=&quot;x&quot;&gt;&amp;");
});
