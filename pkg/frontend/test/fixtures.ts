import type { HierarchyPayload, LexiconEntryPayload, TaskPayload } from "../src/types.js";

export const MINI_HIERARCHY: HierarchyPayload = {
  version: "test",
  roots: ["Participant", "Circumstance"],
  nodes: [
    { name: "Participant", parents: [], definition: "an entity in the event", hints: [] },
    { name: "Circumstance", parents: [], definition: "a setting of the event", hints: [] },
    { name: "Undergoer", parents: ["Participant"], definition: "affected entity", hints: [] },
    { name: "Theme", parents: ["Undergoer"], definition: "central entity", hints: [] },
    { name: "Topic", parents: ["Theme"], definition: "content of thought", hints: ["About what?"] },
    { name: "Stimulus", parents: ["Undergoer"], definition: "trigger of experience", hints: [] },
    { name: "Time", parents: ["Circumstance"], definition: "when it holds", hints: ["When?"] },
    { name: "Place", parents: ["Circumstance"], definition: "where it holds", hints: [] },
    { name: "Location", parents: ["Place"], definition: "where an entity is", hints: ["Where?"] },
    { name: "Path", parents: ["Place"], definition: "route of motion", hints: [] },
    {
      name: "Crossing",
      parents: ["Path", "Location"],
      definition: "place traversed",
      hints: [],
    },
  ],
};

export const ABOUT_ENTRY: LexiconEntryPayload = {
  language: "en",
  form: "about",
  kind: "preposition",
  prototypical_functions: ["Topic"],
  notes: "",
  native: "",
  attested: [
    { role: "Stimulus", functions: ["Topic"], example: "I was scared about it.", source: "paper" },
    { role: "Stimulus", functions: ["Topic"], example: "I cared about it.", source: "paper" },
    { role: "Topic", functions: ["Topic"], example: "We talked about it.", source: "paper" },
    { role: "Stimulus", functions: [], example: "Wild about it.", source: "pilot" },
  ],
};

export const SCARED_TASK: TaskPayload = {
  task_id: "d1:s1:3-4:joint:alice",
  doc_id: "d1",
  sent_id: "s1",
  span: [3, 4],
  form: "about",
  language: "en",
  stage: "joint",
  tokens: ["I", "was", "scared", "about", "getting", "my", "ears", "pierced", "."],
  suggested: ["Stimulus~>Topic", "Topic~>Topic"],
};
