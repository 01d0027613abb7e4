//! Cartesian products of scripts (the cubic form on truncated complexes and
//! the simplicial form that keeps unit factors as negative-dimensional
//! cells) together with the parametric generators: intervals, circles,
//! spheres, balls, simplexes, cubes, grids, polygons and tori.

use std::cmp::Reverse;

use num_traits::{Signed, Zero};

use crate::cell::{int, CellId, Chain, Int};
use crate::error::{Error, Result};
use crate::script::{Script, ScriptBuilder};

/// One element of a product factor: a cell, or the factor's unit in the
/// simplicial case.
struct FactorElem {
    name: String,
    dim: i32,
    /// boundary as (element index, coefficient) pairs
    boundary: Vec<(usize, Int)>,
}

/// Tuple names flatten nested products: a component that is itself a tuple
/// contributes its inner part, so ((a,b),c) renders as (a,b,c).
fn tuple_name(parts: &[&str]) -> String {
    let inner: Vec<&str> = parts
        .iter()
        .map(|p| {
            if p.len() >= 2 && p.starts_with('(') && p.ends_with(')') {
                &p[1..p.len() - 1]
            } else {
                *p
            }
        })
        .collect();
    format!("({})", inner.join(","))
}

/// Elements of a factor in stored order. `with_unit` adds the dimension -1
/// unit in front and routes point boundaries onto it; otherwise boundaries
/// are truncated at the bottom level.
fn factor_elems(s: &Script, with_unit: bool) -> Vec<FactorElem> {
    let mut elems: Vec<FactorElem> = Vec::new();
    let mut index: std::collections::HashMap<CellId, usize> = std::collections::HashMap::new();
    if with_unit {
        elems.push(FactorElem { name: "1".into(), dim: -1, boundary: Vec::new() });
    }
    for dim in s.dims() {
        for cell in s.cells_of_dim(dim) {
            index.insert(cell.clone(), elems.len());
            elems.push(FactorElem {
                name: cell.name.clone(),
                dim: cell.dim,
                boundary: Vec::new(),
            });
        }
    }
    let acc = s.accumulator_id();
    for dim in s.dims() {
        for cell in s.cells_of_dim(dim) {
            let i = index[cell];
            let mut boundary = Vec::new();
            for (target, coeff) in s.boundary_of(cell).expect("factor cell").iter() {
                if target.is_accumulator() && target.dim == s.acc_dim() {
                    if with_unit {
                        debug_assert_eq!(*target, acc);
                        boundary.push((0, coeff.clone()));
                    }
                    // truncated: the accumulator term is dropped
                } else if let Some(&j) = index.get(target) {
                    boundary.push((j, coeff.clone()));
                }
            }
            elems[i].boundary = boundary;
        }
    }
    elems
}

/// Shared product core. Cells are all element tuples (minus the all-unit
/// tuple in the simplicial case); the boundary follows the signed Leibniz
/// rule with the sign carried by the dimensions of the leading factors.
fn product_multi(factors: &[&Script], simplicial: bool) -> Result<Script> {
    if factors.is_empty() {
        return Err(Error::BadParameter("a product needs at least one factor".into()));
    }
    if simplicial {
        for s in factors {
            if !s.has_accumulator() || s.acc_dim() != -1 {
                return Err(Error::MissingAccumulator(s.name().to_string()));
            }
        }
    }
    let elems: Vec<Vec<FactorElem>> = factors
        .iter()
        .map(|s| factor_elems(s, simplicial))
        .collect();
    let l = factors.len();
    let acc_dim = -(l as i32);

    // enumerate tuples of element indices, row-major
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for f in &elems {
        let mut next = Vec::with_capacity(tuples.len() * f.len());
        for t in &tuples {
            for i in 0..f.len() {
                let mut t2 = t.clone();
                t2.push(i);
                next.push(t2);
            }
        }
        tuples = next;
    }
    let dims_of = |t: &[usize]| -> Vec<i32> {
        t.iter().enumerate().map(|(f, &i)| elems[f][i].dim).collect()
    };
    // drop the all-unit tuple: it is the accumulator of the product
    if simplicial {
        tuples.retain(|t| t.iter().any(|&i| i != 0));
    }
    // order: total dimension, then composition (descending), then position
    tuples.sort_by(|a, b| {
        let da: i32 = dims_of(a).iter().sum();
        let db: i32 = dims_of(b).iter().sum();
        (da, Reverse(dims_of(a)), a.clone()).cmp(&(db, Reverse(dims_of(b)), b.clone()))
    });

    let name_of = |t: &[usize]| -> String {
        let parts: Vec<&str> = t
            .iter()
            .enumerate()
            .map(|(f, &i)| elems[f][i].name.as_str())
            .collect();
        tuple_name(&parts)
    };
    let base = factors.iter().map(|s| s.name()).collect::<Vec<_>>().join("x");
    let mut out = Script::new(base);
    out.set_acc_dim(acc_dim);
    out.set_has_accumulator(simplicial);
    if !simplicial {
        out.set_acc_dim(-1);
    }
    let is_unit = |f: usize, i: usize| simplicial && i == 0 && elems[f][i].dim == -1;
    let product_acc = out.accumulator_id();
    for t in &tuples {
        let dim: i32 = dims_of(t).iter().sum();
        let mut chain = Chain::zero(dim - 1);
        let mut sign = Int::from(1);
        for f in 0..l {
            for (j, coeff) in &elems[f][t[f]].boundary {
                let mut t2 = t.clone();
                t2[f] = *j;
                let all_units = (0..l).all(|g| is_unit(g, t2[g]));
                let target = if all_units {
                    product_acc.clone()
                } else {
                    CellId::new(dim - 1, name_of(&t2))
                };
                chain.add_term(target, coeff * &sign);
            }
            if elems[f][t[f]].dim % 2 != 0 {
                sign = -sign;
            }
        }
        out.insert_cell(CellId::new(dim, name_of(t)), chain)?;
    }
    debug_assert!(out.validate().is_valid());
    Ok(out)
}

/// Cubic Cartesian product of truncated complexes; the result carries no
/// accumulator.
pub fn cubic_product(a: &Script, b: &Script) -> Result<Script> {
    product_multi(&[a, b], false)
}

pub fn cubic_product_multi(factors: &[&Script]) -> Result<Script> {
    product_multi(factors, false)
}

/// Gives every bottom-level cell accumulator coefficient one and re-checks
/// that the level above still squares to zero.
pub fn extend_with_accumulator(p: &Script) -> Result<Script> {
    let mut out = p.clone();
    out.set_has_accumulator(true);
    let acc = out.accumulator_id();
    let bottom = out.acc_dim() + 1;
    for cell in p.cells_of_dim(bottom) {
        let mut chain = p.boundary_of(cell)?;
        let already = chain.coeff(&acc);
        chain.add_term(acc.clone(), Int::from(1) - already);
        out.set_boundary(cell, chain)?;
    }
    let report = out.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::ComplexViolation(v.to_string()));
    }
    Ok(out)
}

/// Simplicial Cartesian product: unit factors become dimension -1 cells and
/// the all-unit tuple is the new accumulator, two levels down for a pair of
/// factors. With `renormalize` the grading is shifted back so points sit at
/// dimension zero and every point boundary is plus one.
pub fn simplicial_product(a: &Script, b: &Script, renormalize: bool) -> Result<Script> {
    simplicial_product_multi(&[a, b], renormalize)
}

pub fn simplicial_product_multi(factors: &[&Script], renormalize: bool) -> Result<Script> {
    let raw = product_multi(factors, true)?;
    if !renormalize {
        return Ok(raw);
    }
    let l = factors.len() as i32;
    let shifted = raw.shift_dims(l - 1);
    let mut flips = std::collections::BTreeMap::new();
    for p in shifted.cells_of_dim(0) {
        if shifted.acc_coeff(p).is_negative() {
            flips.insert(p.clone(), -1i8);
        }
    }
    let out = shifted.relabel_equivalent(&flips)?;
    debug_assert!(out.validate().is_valid());
    Ok(out)
}

// ---- generators ------------------------------------------------------

/// Two points and the line between them.
pub fn gen_interval() -> Script {
    let mut b = ScriptBuilder::new("interval");
    b.points(["p", "q"]);
    b.cell(1, "l", [(1, "p"), (-1, "q")]);
    b.build()
}

/// Two points joined by two lines.
pub fn gen_circle() -> Script {
    let mut b = ScriptBuilder::new("circle");
    b.points(["p1", "p2"]);
    b.cell(1, "l1", [(1, "p1"), (-1, "p2")]);
    b.cell(1, "l2", [(1, "p1"), (-1, "p2")]);
    b.build()
}

/// The m-sphere with two cells per dimension.
pub fn gen_sphere(m: u32) -> Result<Script> {
    if m == 0 {
        return Err(Error::BadParameter("sphere dimension must be positive".into()));
    }
    let mut b = ScriptBuilder::new(format!("sphere{m}"));
    b.points(["a0", "b0"]);
    for k in 1..=m as i32 {
        let below_a = format!("a{}", k - 1);
        let below_b = format!("b{}", k - 1);
        for name in [format!("a{k}"), format!("b{k}")] {
            b.cell(k, &name, [(1, below_a.as_str()), (-1, below_b.as_str())]);
        }
    }
    Ok(b.build())
}

/// The m-ball: an (m-1)-sphere capped by a single top cell.
pub fn gen_ball(m: u32) -> Result<Script> {
    if m == 0 {
        return Err(Error::BadParameter("ball dimension must be positive".into()));
    }
    let mut s = if m == 1 {
        let mut b = ScriptBuilder::new(String::new());
        b.points(["a0", "b0"]);
        b.build()
    } else {
        gen_sphere(m - 1)?
    };
    s.set_name(format!("ball{m}"));
    let k = (m - 1) as i32;
    let chain = Chain::from_terms(
        k,
        [
            (CellId::new(k, format!("a{k}")), int(1)),
            (CellId::new(k, format!("b{k}")), int(-1)),
        ],
    );
    s.insert_cell(CellId::new(m as i32, "D"), chain)?;
    Ok(s)
}

/// The regular m-simplex with the alternating face boundary.
pub fn gen_simplex(m: u32) -> Result<Script> {
    let m = m as usize;
    let mut b = ScriptBuilder::new(format!("simplex{m}"));
    let name = |verts: &[usize]| -> String {
        format!(
            "[{}]",
            verts.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        )
    };
    // all (k+1)-subsets of 0..=m in lexicographic order per dimension
    let mut level: Vec<Vec<usize>> = (0..=m).map(|v| vec![v]).collect();
    for v in &level {
        b.point(&name(v));
    }
    for k in 1..=m {
        let mut next: Vec<Vec<usize>> = Vec::new();
        fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur: Vec<usize> = (0..k).collect();
            loop {
                out.push(cur.clone());
                // advance the combination
                let mut i = k;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if cur[i] != i + m - k {
                        break;
                    }
                    if i == 0 {
                        return out;
                    }
                }
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
        }
        for verts in subsets(m + 1, k + 1) {
            let mut terms: Vec<(i64, String)> = Vec::new();
            for (j, _) in verts.iter().enumerate() {
                let mut face = verts.clone();
                face.remove(j);
                let coeff = if j % 2 == 0 { 1 } else { -1 };
                terms.push((coeff, name(&face)));
            }
            let refs: Vec<(i64, &str)> = terms.iter().map(|(c, n)| (*c, n.as_str())).collect();
            b.cell(k as i32, &name(&verts), refs);
            next.push(verts);
        }
        level = next;
        let _ = &level;
    }
    Ok(b.build())
}

/// The open path with k segments: points p0..pk, lines l1..lk.
fn gen_path(k: u32) -> Script {
    let mut b = ScriptBuilder::new(format!("path{k}"));
    for j in 0..=k {
        b.point(&format!("p{j}"));
    }
    for j in 1..=k {
        let to = format!("p{j}");
        let from = format!("p{}", j - 1);
        b.cell(1, &format!("l{j}"), [(1, to.as_str()), (-1, from.as_str())]);
    }
    b.build()
}

/// The k-polygon: the path closed up by the wrap-around line.
pub fn gen_polygon(k: u32) -> Result<Script> {
    if k < 2 {
        return Err(Error::BadParameter("a polygon needs at least two lines".into()));
    }
    let mut b = ScriptBuilder::new(format!("polygon{k}"));
    for j in 0..k {
        b.point(&format!("p{j}"));
    }
    for j in 1..k {
        let to = format!("p{j}");
        let from = format!("p{}", j - 1);
        b.cell(1, &format!("l{j}"), [(1, to.as_str()), (-1, from.as_str())]);
    }
    let last_from = format!("p{}", k - 1);
    b.cell(1, &format!("l{k}"), [(1, "p0"), (-1, last_from.as_str())]);
    Ok(b.build())
}

/// The l-cube as an extended l-fold product of unit intervals.
pub fn gen_cube(l: u32) -> Result<Script> {
    gen_multicube(&vec![1; l as usize])
}

/// Extended product of open paths of the given lengths.
pub fn gen_multicube(lengths: &[u32]) -> Result<Script> {
    if lengths.is_empty() || lengths.iter().any(|&k| k == 0) {
        return Err(Error::BadParameter("multicube lengths must be positive".into()));
    }
    let paths: Vec<Script> = lengths.iter().map(|&k| gen_path(k)).collect();
    let refs: Vec<&Script> = paths.iter().collect();
    let mut s = extend_with_accumulator(&cubic_product_multi(&refs)?)?;
    s.set_name(format!(
        "multicube{}",
        lengths.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("x")
    ));
    Ok(s)
}

/// A finite window of the m-dimensional grid: points are integer tuples in
/// `lo..=hi`, lines are the unit steps, and so on up. Window-edge cells
/// keep their one-sided boundaries.
pub fn gen_grid_window(m: u32, lo: i64, hi: i64) -> Result<Script> {
    if m == 0 || lo >= hi {
        return Err(Error::BadParameter("grid needs m >= 1 and lo < hi".into()));
    }
    let mut b = ScriptBuilder::new("grid-axis");
    for a in lo..=hi {
        b.point(&a.to_string());
    }
    for j in lo..hi {
        let to = (j + 1).to_string();
        let from = j.to_string();
        b.cell(1, &format!("I{j}"), [(1, to.as_str()), (-1, from.as_str())]);
    }
    let axis = b.build();
    let refs: Vec<&Script> = (0..m).map(|_| &axis).collect();
    let mut s = extend_with_accumulator(&cubic_product_multi(&refs)?)?;
    s.set_name(format!("grid{m}[{lo},{hi}]"));
    Ok(s)
}

/// Extended product of polygons.
pub fn gen_torus(sides: &[u32]) -> Result<Script> {
    if sides.is_empty() {
        return Err(Error::BadParameter("torus needs at least one factor".into()));
    }
    let polys: Vec<Script> = sides
        .iter()
        .map(|&k| gen_polygon(k))
        .collect::<Result<_>>()?;
    let refs: Vec<&Script> = polys.iter().collect();
    let mut s = extend_with_accumulator(&cubic_product_multi(&refs)?)?;
    s.set_name(format!(
        "torus{}",
        sides.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("x")
    ));
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equiv::are_equivalent;

    fn q1() -> Script {
        gen_path(1)
    }

    #[test]
    fn cube_cell_counts() {
        let q3 = gen_cube(3).unwrap();
        assert_eq!(
            [0, 1, 2, 3].map(|k| q3.cells_of_dim(k).len()),
            [8, 12, 6, 1]
        );
        assert!(q3.validate().is_valid());
    }

    #[test]
    fn triple_product_volume_boundary_follows_the_leibniz_rule() {
        let a = q1();
        let product = cubic_product_multi(&[&a, &a, &a]).unwrap();
        let vol = CellId::new(3, "(l1,l1,l1)");
        let b = product.boundary_of(&vol).unwrap();
        assert_eq!(b.coeff(&CellId::new(2, "(p1,l1,l1)")), int(1));
        assert_eq!(b.coeff(&CellId::new(2, "(p0,l1,l1)")), int(-1));
        assert_eq!(b.coeff(&CellId::new(2, "(l1,p1,l1)")), int(-1));
        assert_eq!(b.coeff(&CellId::new(2, "(l1,p0,l1)")), int(1));
        assert_eq!(b.coeff(&CellId::new(2, "(l1,l1,p1)")), int(1));
        assert_eq!(b.coeff(&CellId::new(2, "(l1,l1,p0)")), int(-1));
    }

    #[test]
    fn product_with_a_point_renames_only() {
        let mut b = ScriptBuilder::new("pt");
        b.point("o");
        let point = b.build();
        let circle = gen_circle();
        let product = extend_with_accumulator(&cubic_product(&circle, &point).unwrap()).unwrap();
        assert!(are_equivalent(&product, &circle).unwrap().is_some());
    }

    #[test]
    fn extended_cube_points_sum_to_one() {
        let q3 = gen_cube(3).unwrap();
        for p in q3.cells_of_dim(0) {
            assert_eq!(q3.acc_coeff(p), int(1));
        }
    }

    #[test]
    fn simplicial_fourth_power_of_a_point_lists_the_simplex_cells() {
        let mut b = ScriptBuilder::new("P");
        b.point("p");
        let p = b.build();
        let s = simplicial_product_multi(&[&p, &p, &p, &p], false).unwrap();
        assert_eq!(s.acc_dim(), -4);
        assert_eq!(
            [-3, -2, -1, 0].map(|k| s.cells_of_dim(k).len()),
            [4, 6, 4, 1]
        );
        let b = s.boundary_of(&CellId::new(-2, "(p,1,p,1)")).unwrap();
        assert_eq!(b.coeff(&CellId::new(-3, "(1,1,p,1)")), int(1));
        assert_eq!(b.coeff(&CellId::new(-3, "(p,1,1,1)")), int(-1));
        assert_eq!(b.support().len(), 2);
        // the point-level boundaries hit the accumulator with both signs
        assert_eq!(s.acc_coeff(&CellId::new(-3, "(p,1,1,1)")), int(1));
        assert_eq!(s.acc_coeff(&CellId::new(-3, "(1,p,1,1)")), int(-1));
    }

    #[test]
    fn renormalized_fourth_power_is_a_three_simplex() {
        let mut b = ScriptBuilder::new("P");
        b.point("p");
        let p = b.build();
        let s = simplicial_product_multi(&[&p, &p, &p, &p], true).unwrap();
        let simplex = gen_simplex(3).unwrap();
        assert!(are_equivalent(&s, &simplex).unwrap().is_some());
    }

    #[test]
    fn interval_squared_is_a_three_simplex() {
        let i = gen_interval();
        let s = simplicial_product(&i, &i, true).unwrap();
        let simplex = gen_simplex(3).unwrap();
        assert!(are_equivalent(&s, &simplex).unwrap().is_some());
    }

    #[test]
    fn simplex_two_is_the_triangle() {
        let s = gen_simplex(2).unwrap();
        let b = s.boundary_of(&CellId::new(2, "[0,1,2]")).unwrap();
        assert_eq!(b.coeff(&CellId::new(1, "[1,2]")), int(1));
        assert_eq!(b.coeff(&CellId::new(1, "[0,2]")), int(-1));
        assert_eq!(b.coeff(&CellId::new(1, "[0,1]")), int(1));
        assert!(s.validate().is_valid());
    }

    #[test]
    fn sphere_one_is_the_circle() {
        let s = gen_sphere(1).unwrap();
        assert!(are_equivalent(&s, &gen_circle()).unwrap().is_some());
    }

    #[test]
    fn torus_cell_counts_match_the_subset_formula() {
        let t = gen_torus(&[3, 4]).unwrap();
        // per dimension j: choose which factors contribute a line
        assert_eq!(t.cells_of_dim(0).len(), 12);
        assert_eq!(t.cells_of_dim(1).len(), 24);
        assert_eq!(t.cells_of_dim(2).len(), 12);
        assert!(t.validate().is_valid());
    }

    #[test]
    fn grid_window_has_free_edges_and_validates() {
        let g = gen_grid_window(2, -1, 1).unwrap();
        assert_eq!(g.cells_of_dim(0).len(), 9);
        assert_eq!(g.cells_of_dim(1).len(), 12);
        assert_eq!(g.cells_of_dim(2).len(), 4);
        assert!(g.validate().is_valid());
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(gen_polygon(1).is_err());
        assert!(gen_sphere(0).is_err());
        assert!(gen_grid_window(0, 0, 1).is_err());
        assert!(gen_grid_window(1, 3, 3).is_err());
    }

    use crate::script::ScriptBuilder;
}
