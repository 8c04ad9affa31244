/** Client-side view of the served label taxonomy. All label inventories come
 * from GET /hierarchy at session start; nothing is hard-coded here. */

import type { HierarchyPayload, SupersenseNode } from "./types.js";

export interface TreeNode {
  name: string;
  shared: boolean; // reached through more than one parent
  children: TreeNode[];
}

export class HierarchyIndex {
  readonly version: string;
  readonly roots: string[];
  private readonly byName = new Map<string, SupersenseNode>();
  private readonly childMap = new Map<string, string[]>();

  constructor(payload: HierarchyPayload) {
    this.version = payload.version;
    this.roots = [...payload.roots];
    for (const node of payload.nodes) {
      this.byName.set(node.name, node);
      if (!this.childMap.has(node.name)) {
        this.childMap.set(node.name, []);
      }
    }
    for (const node of payload.nodes) {
      for (const parent of node.parents) {
        const siblings = this.childMap.get(parent);
        if (siblings) {
          siblings.push(node.name);
        }
      }
    }
  }

  labels(): Set<string> {
    return new Set(this.byName.keys());
  }

  has(label: string): boolean {
    return this.byName.has(label);
  }

  node(label: string): SupersenseNode | undefined {
    return this.byName.get(label);
  }

  children(label: string): string[] {
    return this.childMap.get(label) ?? [];
  }

  hints(label: string): string[] {
    return this.byName.get(label)?.hints ?? [];
  }

  definition(label: string): string {
    return this.byName.get(label)?.definition ?? "";
  }

  isShared(label: string): boolean {
    return (this.byName.get(label)?.parents.length ?? 0) >= 2;
  }

  /** The hierarchy as a forest; multi-parent labels appear under each parent,
   * flagged as shared. Safe because the served graph is acyclic. */
  tree(): TreeNode[] {
    const build = (name: string): TreeNode => ({
      name,
      shared: this.isShared(name),
      children: this.children(name).map(build),
    });
    return this.roots.map(build);
  }

  /** Case-insensitive substring search over label names, stable order. */
  search(query: string): string[] {
    const needle = query.trim().toLowerCase();
    if (!needle) {
      return [];
    }
    return [...this.byName.keys()].filter((name) => name.toLowerCase().includes(needle));
  }
}
