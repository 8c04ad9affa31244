/** Payload shapes of the annotation service API. Field names mirror the
 * server's schemas exactly; construals travel as notation strings. */

export interface SupersenseNode {
  name: string;
  parents: string[];
  definition: string;
  hints: string[];
}

export interface HierarchyPayload {
  version: string;
  roots: string[];
  nodes: SupersenseNode[];
}

export interface AttestationPayload {
  role: string;
  functions: string[];
  example: string;
  source: string;
}

export interface LexiconEntryPayload {
  language: string;
  form: string;
  kind: string;
  prototypical_functions: string[];
  attested: AttestationPayload[];
  notes: string;
  native: string;
}

export type Stage = "joint" | "role-only" | "function-only";

export interface TaskPayload {
  task_id: string;
  doc_id: string;
  sent_id: string;
  span: [number, number];
  form: string;
  language: string;
  stage: Stage;
  tokens: string[];
  suggested: string[];
}

export interface AnnotationSubmission {
  task_id: string;
  annotator: string;
  construal: string;
  note?: string;
}

export interface AnnotationAck {
  doc_id: string;
  sent_id: string;
  span: [number, number];
  form: string;
  annotator: string;
  construal: string;
  note: string;
}

export interface DisagreementEntryPayload {
  annotator: string;
  construal: string;
}

export interface DisagreementPayload {
  doc_id: string;
  sent_id: string;
  span: [number, number];
  form: string;
  tokens: string[];
  annotations: DisagreementEntryPayload[];
}

export interface AdjudicationRequest {
  doc_id: string;
  sent_id: string;
  start: number;
  end: number;
  construal: string;
  expert_id: string;
  force?: boolean;
}

export interface StatsPayload {
  tokens_annotated: number;
  label_histogram: { role: Record<string, number>; function: Record<string, number> };
  mismatch_rate: number;
  null_function_rate: number;
  role_only_labels: string[];
  function_only_labels: string[];
}
