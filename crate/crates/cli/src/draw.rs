//! Deterministic SVG of a window of the Auslander–Reiten quiver of `D^b(mod H)`
//! for a hereditary algebra `H`, with coaisle membership shading.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use silting::algebra::homological::{dtr, is_injective, is_projective, trd};
use silting::algebra::{injective, iso_modules, projective, Rep};
use silting::perf::{stalk, Session, SiltCandidate};
use silting::silting::in_coaisle;
use silting::{Error, Result};

pub const SVG_HEADER: &str = "<!-- silting-svg v1 -->";
const COLORS: [&str; 3] = ["#d62728", "#1f77b4", "#2ca02c"];
const DX: i32 = 36;
const DY: i32 = 56;
const PAD: i32 = 40;

/// A shading layer: nodes whose object lies in `V_X` are filled.
pub struct Shade {
    pub name: String,
    pub object: SiltCandidate,
}

struct Node {
    module: usize,
    shift: i32,
    x: i32,
    y: i32,
}

/// Longest path from each vertex to a sink.
fn levels(alg: &silting::algebra::PathAlgebra) -> Vec<i32> {
    let n = alg.n();
    let mut lvl = vec![0i32; n];
    for _ in 0..n {
        for a in &alg.quiver.arrows {
            lvl[a.src] = lvl[a.src].max(lvl[a.tgt] + 1);
        }
    }
    lvl
}

fn index_of(mods: &[Rep], m: &Rep) -> Result<Option<usize>> {
    for (i, c) in mods.iter().enumerate() {
        if c.dims() == m.dims() && iso_modules(c, m)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Renders modules `τ^{−k}P_i` and `τ^k I_i` for `k < depth`, shifted by
/// `lo..=hi`. Preprojectives sit left, preinjectives right and the `extra`
/// modules (regular ones, say) in a band between them; each shift is one
/// period further right. Arrows follow the meshes of the knitting.
pub fn ar_window_svg(sess: &mut Session, depth: usize, lo: i32, hi: i32, extra: &[Rep], shades: &[Shade]) -> Result<String> {
    let alg = sess.alg.clone();
    if !alg.is_hereditary() {
        return Err(Error::NotHereditary("drawing the AR quiver"));
    }
    let n = alg.n();
    let lvl = levels(&alg);
    let w = lvl.iter().max().copied().unwrap_or(0) + 1;
    // (preprojective 0 | preinjective 1, vertex, k) -> module index
    let mut mods: Vec<Rep> = Vec::new();
    let mut pos: Vec<(i32, i32)> = Vec::new();
    let mut key: BTreeMap<(u8, usize, usize), usize> = BTreeMap::new();
    let place = |m: Rep, x: i32, y: i32, mods: &mut Vec<Rep>, pos: &mut Vec<(i32, i32)>| -> Result<usize> {
        if let Some(i) = index_of(mods, &m)? {
            return Ok(i);
        }
        mods.push(m);
        pos.push((x, y));
        Ok(mods.len() - 1)
    };
    let mut kmax = 0;
    for i in 0..n {
        let mut m = projective(&alg, i)?;
        for k in 0..depth {
            let idx = place(m.clone(), lvl[i] + k as i32 * w, i as i32, &mut mods, &mut pos)?;
            key.insert((0, i, k), idx);
            kmax = kmax.max(k as i32);
            if is_injective(&m) {
                break;
            }
            m = trd(&m)?;
            if m.is_zero() {
                break;
            }
        }
    }
    let mut band = Vec::new();
    for m in extra {
        if index_of(&mods, m)?.is_none() && index_of(&band, m)?.is_none() {
            band.push(m.clone());
        }
    }
    let cols = (band.len() as i32 + n as i32 - 1) / n.max(1) as i32;
    for (j, m) in band.into_iter().enumerate() {
        let (c, r) = (j as i32 / n as i32, j as i32 % n as i32);
        place(m, (kmax + 1) * w + 1 + 2 * c, r, &mut mods, &mut pos)?;
    }
    let base = (kmax + 2) * w + 2 * cols;
    for i in 0..n {
        let mut m = injective(&alg, i)?;
        for k in 0..depth {
            let idx = place(m.clone(), base + lvl[i] - k as i32 * w, i as i32, &mut mods, &mut pos)?;
            key.insert((1, i, k), idx);
            if is_projective(&m) {
                break;
            }
            m = dtr(&m)?;
            if m.is_zero() {
                break;
            }
        }
    }
    // One period: P_v[1] sits one τ-step right of I_v.
    let period = (0..n)
        .map(|v| pos[key[&(1, v, 0)]].0 + w - pos[key[&(0, v, 0)]].0)
        .max()
        .unwrap_or(w)
        .max(1);
    let minx = pos.iter().map(|p| p.0).min().unwrap_or(0);

    let mut edges: Vec<((usize, i32), (usize, i32))> = Vec::new();
    let push = |a: Option<&usize>, b: Option<&usize>, ds: i32, edges: &mut Vec<_>| {
        if let (Some(&a), Some(&b)) = (a, b) {
            if a != b {
                edges.push(((a, 0), (b, ds)));
            }
        }
    };
    for arrow in &alg.quiver.arrows {
        let (i, j) = (arrow.src, arrow.tgt);
        for k in 0..depth {
            push(key.get(&(0, j, k)), key.get(&(0, i, k)), 0, &mut edges);
            push(key.get(&(0, i, k)), key.get(&(0, j, k + 1)), 0, &mut edges);
            push(key.get(&(1, j, k)), key.get(&(1, i, k)), 0, &mut edges);
            push(key.get(&(1, i, k + 1)), key.get(&(1, j, k)), 0, &mut edges);
        }
        push(key.get(&(1, i, 0)), key.get(&(0, j, 0)), 1, &mut edges);
    }
    edges.sort_unstable();
    edges.dedup();

    let mut nodes = Vec::new();
    if lo <= hi {
        for s in lo..=hi {
            for (m, &(x, y)) in pos.iter().enumerate() {
                nodes.push(Node { module: m, shift: s, x: x - minx + (s - lo) * period, y });
            }
        }
    }
    let mut member = vec![vec![false; shades.len()]; nodes.len()];
    for (ni, nd) in nodes.iter().enumerate() {
        let c = stalk(&mods[nd.module], nd.shift, sess.pd_cap)?;
        for (si, sh) in shades.iter().enumerate().take(COLORS.len()) {
            member[ni][si] = in_coaisle(sess, &sh.object, &c);
        }
    }

    let maxx = nodes.iter().map(|n| n.x).max().unwrap_or(-1);
    let width = if nodes.is_empty() { 2 * PAD } else { 2 * PAD + maxx * DX };
    let height = if nodes.is_empty() { 2 * PAD } else { 2 * PAD + (n as i32 - 1) * DY + 40 };
    let mut s = String::new();
    let _ = writeln!(s, "{SVG_HEADER}");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"9\">"
    );
    let at = |nd: &Node| (PAD + nd.x * DX, PAD + nd.y * DY);
    let index: BTreeMap<(usize, i32), usize> = nodes.iter().enumerate().map(|(i, nd)| ((nd.module, nd.shift), i)).collect();
    for nd in &nodes {
        for &((a, _), (b, ds)) in edges.iter().filter(|e| e.0 .0 == nd.module) {
            debug_assert_eq!(a, nd.module);
            if let Some(&t) = index.get(&(b, nd.shift + ds)) {
                let (x1, y1) = at(nd);
                let (x2, y2) = at(&nodes[t]);
                let _ = writeln!(s, "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#999\" stroke-width=\"1\"/>");
            }
        }
    }
    for (ni, nd) in nodes.iter().enumerate() {
        let (x, y) = at(nd);
        let _ = writeln!(s, "  <circle cx=\"{x}\" cy=\"{y}\" r=\"13\" fill=\"white\" stroke=\"#333\"/>");
        for (si, &inside) in member[ni].iter().enumerate() {
            if inside {
                let r = 12 - 3 * si as i32;
                let _ = writeln!(s, "  <circle cx=\"{x}\" cy=\"{y}\" r=\"{r}\" fill=\"{}\" fill-opacity=\"0.45\"/>", COLORS[si]);
            }
        }
        let dims: String = mods[nd.module].dims().iter().map(|d| d.to_string()).collect();
        let label = if nd.shift == 0 { dims } else { format!("{dims}[{}]", nd.shift) };
        let _ = writeln!(s, "  <text x=\"{x}\" y=\"{}\" text-anchor=\"middle\">{label}</text>", y + 24);
    }
    for (si, sh) in shades.iter().enumerate().take(if nodes.is_empty() { 0 } else { COLORS.len() }) {
        let y = height - 12 - 12 * (shades.len().min(3) - 1 - si) as i32;
        let _ = writeln!(s, "  <rect x=\"8\" y=\"{}\" width=\"8\" height=\"8\" fill=\"{}\" fill-opacity=\"0.45\"/>", y - 8, COLORS[si]);
        let _ = writeln!(s, "  <text x=\"20\" y=\"{y}\">{}</text>", escape(&sh.name));
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
