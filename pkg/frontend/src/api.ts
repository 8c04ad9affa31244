/** Thin typed client for the annotation service. */

import type {
  AdjudicationRequest,
  AnnotationAck,
  AnnotationSubmission,
  DisagreementPayload,
  HierarchyPayload,
  LexiconEntryPayload,
  Stage,
  StatsPayload,
  TaskPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, readonly detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function raise(response: Response): Promise<never> {
  let detail = response.statusText;
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") {
      detail = body.detail;
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, detail);
}

export class ServiceClient {
  constructor(readonly baseUrl: string = "") {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  async hierarchy(): Promise<HierarchyPayload> {
    const response = await fetch(this.url("/hierarchy"));
    if (!response.ok) await raise(response);
    return response.json() as Promise<HierarchyPayload>;
  }

  async lexiconEntry(language: string, form: string): Promise<LexiconEntryPayload | null> {
    const response = await fetch(
      this.url(`/lexicon/${encodeURIComponent(language)}/${encodeURIComponent(form)}`),
    );
    if (response.status === 404) {
      return null;
    }
    if (!response.ok) await raise(response);
    return response.json() as Promise<LexiconEntryPayload>;
  }

  async nextTask(annotator: string, stage: Stage): Promise<TaskPayload | null> {
    const params = new URLSearchParams({ annotator, stage });
    const response = await fetch(this.url(`/tasks/next?${params}`));
    if (response.status === 204) {
      return null;
    }
    if (!response.ok) await raise(response);
    return response.json() as Promise<TaskPayload>;
  }

  async submit(submission: AnnotationSubmission): Promise<AnnotationAck> {
    const response = await fetch(this.url("/annotations"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(submission),
    });
    if (!response.ok) await raise(response);
    return response.json() as Promise<AnnotationAck>;
  }

  async disagreements(): Promise<DisagreementPayload[]> {
    const response = await fetch(this.url("/disagreements"));
    if (!response.ok) await raise(response);
    return response.json() as Promise<DisagreementPayload[]>;
  }

  async adjudicate(request: AdjudicationRequest): Promise<AnnotationAck> {
    const response = await fetch(this.url("/adjudications"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!response.ok) await raise(response);
    return response.json() as Promise<AnnotationAck>;
  }

  async stats(): Promise<StatsPayload> {
    const response = await fetch(this.url("/stats"));
    if (!response.ok) await raise(response);
    return response.json() as Promise<StatsPayload>;
  }
}
