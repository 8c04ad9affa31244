import assert from "node:assert/strict";
import { test } from "node:test";

import { HierarchyIndex } from "../src/hierarchy.js";
import { MINI_HIERARCHY } from "./fixtures.js";

const index = new HierarchyIndex(MINI_HIERARCHY);

test("label inventory comes from the payload, nothing hard-coded", () => {
  assert.equal(index.labels().size, MINI_HIERARCHY.nodes.length);
  assert.ok(index.has("Crossing"));
  assert.ok(!index.has("Nonesuch"));
});

test("children are derived from parent edges", () => {
  assert.deepEqual(index.children("Place").sort(), ["Location", "Path"]);
  assert.deepEqual(index.children("Topic"), []);
});

test("multi-parent labels are flagged shared", () => {
  assert.ok(index.isShared("Crossing"));
  assert.ok(!index.isShared("Location"));
});

test("tree lists shared nodes under each parent", () => {
  const forest = index.tree();
  assert.deepEqual(
    forest.map((node) => node.name),
    MINI_HIERARCHY.roots,
  );
  const circumstance = forest[1]!;
  const place = circumstance.children.find((c) => c.name === "Place")!;
  const parentsHoldingCrossing = place.children.filter((child) =>
    child.children.some((grandchild) => grandchild.name === "Crossing"),
  );
  assert.equal(parentsHoldingCrossing.length, 2);
  for (const parent of parentsHoldingCrossing) {
    const crossing = parent.children.find((c) => c.name === "Crossing")!;
    assert.ok(crossing.shared);
  }
});

test("hints and definitions ride along", () => {
  assert.deepEqual(index.hints("Time"), ["When?"]);
  assert.match(index.definition("Topic"), /content/);
});

test("search is a case-insensitive substring match", () => {
  assert.deepEqual(index.search("loc"), ["Location"]);
  assert.deepEqual(index.search(""), []);
  assert.ok(index.search("T").includes("Topic"));
});
