import type { ModelDoc } from "./types.js";

/**
 * Topological level per variable: roots at 0, every other node one past its
 * deepest parent. Drives the panel ordering (causes above effects).
 */
export function topologicalLevels(model: ModelDoc): Record<string, number> {
  const parents: Record<string, string[]> = {};
  for (const cpt of model.cpts) parents[cpt.child] = cpt.parents;
  const levels: Record<string, number> = {};
  const visit = (id: string, trail: Set<string>): number => {
    if (id in levels) return levels[id];
    if (trail.has(id)) throw new Error(`cycle through ${id}`);
    trail.add(id);
    const parentLevels = (parents[id] ?? []).map((p) => visit(p, trail));
    trail.delete(id);
    levels[id] = parentLevels.length === 0 ? 0 : Math.max(...parentLevels) + 1;
    return levels[id];
  };
  for (const variable of model.variables) visit(variable.id, new Set());
  return levels;
}

/** Variable ids sorted by topological level, declaration order within a level. */
export function panelOrder(model: ModelDoc): string[] {
  const levels = topologicalLevels(model);
  return model.variables
    .map((v, index) => ({ id: v.id, level: levels[v.id], index }))
    .sort((a, b) => a.level - b.level || a.index - b.index)
    .map((entry) => entry.id);
}

/** All parent -> child arcs, in model declaration order. */
export function arcs(model: ModelDoc): Array<{ parent: string; child: string }> {
  const out: Array<{ parent: string; child: string }> = [];
  for (const cpt of model.cpts) {
    for (const parent of cpt.parents) out.push({ parent, child: cpt.child });
  }
  return out;
}
