/** Construal notation: parsing, formatting, and the client-side validation
 * that mirrors the server's rules. The client refuses to submit anything the
 * server would reject; the server stays authoritative. */

export interface Construal {
  role: string;
  functions: string[];
  metaphoric: boolean;
}

export const CHAIN_ARROW = "~>";
export const METAPHOR_SUFFIX = "!m";

export class NotationError extends Error {
  constructor(message: string, readonly offset: number) {
    super(`${message} (at offset ${offset})`);
  }
}

export function formatConstrual(c: Construal): string {
  const body = [c.role, ...c.functions].join(CHAIN_ARROW);
  return c.metaphoric ? body + METAPHOR_SUFFIX : body;
}

export function parseConstrual(text: string): Construal {
  let body = text.trim();
  if (!body) {
    throw new NotationError("empty construal", 0);
  }
  let metaphoric = false;
  if (body.endsWith(METAPHOR_SUFFIX)) {
    metaphoric = true;
    body = body.slice(0, -METAPHOR_SUFFIX.length);
  }
  const labels = body.split(CHAIN_ARROW).map((part) => part.trim());
  for (const label of labels) {
    if (!label) {
      throw new NotationError("missing label", text.indexOf(CHAIN_ARROW));
    }
    if (/\s/.test(label)) {
      throw new NotationError(`label '${label}' contains whitespace`, text.indexOf(label));
    }
    if (label.includes(METAPHOR_SUFFIX)) {
      throw new NotationError(
        `'${METAPHOR_SUFFIX}' is only valid at the end of the notation`,
        text.indexOf(METAPHOR_SUFFIX),
      );
    }
  }
  return { role: labels[0]!, functions: labels.slice(1), metaphoric };
}

export function isCongruent(c: Construal): boolean {
  return c.functions.length === 1 && c.functions[0] === c.role;
}

/** Problems that would make the server reject this construal; empty = valid. */
export function validationProblems(c: Construal, labels: ReadonlySet<string>): string[] {
  const problems: string[] = [];
  if (!c.role) {
    problems.push("no scene role selected");
  } else if (!labels.has(c.role)) {
    problems.push(`unknown role label '${c.role}'`);
  }
  for (const fn of c.functions) {
    if (!labels.has(fn)) {
      problems.push(`unknown function label '${fn}'`);
    }
  }
  for (let i = 1; i < c.functions.length; i++) {
    if (c.functions[i] === c.functions[i - 1]) {
      problems.push(`immediate repetition of '${c.functions[i]}' in the chain`);
    }
  }
  return problems;
}
