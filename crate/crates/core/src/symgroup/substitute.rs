use super::algebra::{bracket_element, shuffle_element, GroupAlgebraElement};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Partial composition σ ∘_i τ in As.
///
/// σ ∈ S_n names the operation (a₁,…,a_n) ↦ a_{σ(1)}⋯a_{σ(n)}: position k
/// of the output word holds input σ(k). Plugging τ into input i replaces
/// the letter a_i by τ's word on inputs i..i+m−1 and renumbers the later
/// inputs.
pub fn substitute_permutation(sigma: &Permutation, i: usize, tau: &Permutation) -> Result<Permutation> {
    let n = sigma.n();
    let m = tau.n();
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!("position {i} outside 1..{n}")));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("cannot substitute an arity-0 element".into()));
    }
    let mut images = Vec::with_capacity(n + m - 1);
    for x in sigma.images() {
        match x.cmp(&i) {
            std::cmp::Ordering::Less => images.push(x),
            std::cmp::Ordering::Equal => images.extend(tau.images().into_iter().map(|y| i - 1 + y)),
            std::cmp::Ordering::Greater => images.push(x + m - 1),
        }
    }
    Permutation::from_images(&images)
}

/// Bilinear extension of [`substitute_permutation`].
pub fn operadic_substitute(
    a: &GroupAlgebraElement,
    i: usize,
    b: &GroupAlgebraElement,
) -> Result<GroupAlgebraElement> {
    let n = a.n();
    let m = b.n();
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!("position {i} outside 1..{n}")));
    }
    let mut out = GroupAlgebraElement::zero(n + m - 1);
    for (s, x) in a.terms() {
        for (t, y) in b.terms() {
            out.add_term(substitute_permutation(s, i, t)?, x * y);
        }
    }
    Ok(out)
}

/// Both sides of (sh_n m_n) ∘_i l = sh_{n+1} (m_n ∘_i l), with m_n the
/// identity of ℚS_n and l = [12] − [21].
///
/// In the word reading a product xy first rearranges by x and then by y,
/// so it is `y.mul(x)` in terms of composition of maps.
pub fn bimodule_identity_sides(n: usize, i: usize) -> Result<(GroupAlgebraElement, GroupAlgebraElement)> {
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!("position {i} outside 1..{n}")));
    }
    let m_n = GroupAlgebraElement::identity(n);
    let l = bracket_element();
    let lhs = operadic_substitute(&m_n.mul(&shuffle_element(n)?), i, &l)?;
    let rhs = operadic_substitute(&m_n, i, &l)?.mul(&shuffle_element(n + 1)?);
    Ok((lhs, rhs))
}

pub fn check_bimodule_identity(n: usize, i: usize) -> Result<bool> {
    let (lhs, rhs) = bimodule_identity_sides(n, i)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn identities_compose_to_identity() {
        let id2 = Permutation::identity(2);
        assert_eq!(substitute_permutation(&id2, 1, &id2).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn m2_circ_l() {
        let l = bracket_element();
        let r = operadic_substitute(&GroupAlgebraElement::identity(2), 1, &l).unwrap();
        assert_eq!(r.to_string(), "[123] - [213]");
    }

    #[test]
    fn swap_substitutions() {
        let s = p(&[2, 1]);
        assert_eq!(substitute_permutation(&s, 1, &Permutation::identity(2)).unwrap(), p(&[3, 1, 2]));
        assert_eq!(substitute_permutation(&s, 2, &s).unwrap(), p(&[3, 2, 1]));
        assert_eq!(substitute_permutation(&s, 1, &s).unwrap(), p(&[3, 2, 1]));
        assert!(substitute_permutation(&s, 3, &s).is_err());
    }

    #[test]
    fn low_arity_identity() {
        for (n, i) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            assert!(check_bimodule_identity(n, i).unwrap());
        }
        let (lhs, _) = bimodule_identity_sides(2, 1).unwrap();
        assert_eq!(lhs.to_string(), "3[123] - 3[213] + [312] - [321]");
    }
}
