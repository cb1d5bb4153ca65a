//! Plactic-specific content: Knuth and Chinese presentations, Schensted row
//! insertion, semistandard Young tableaux, the column-reading standard form,
//! the rank-3 normal-form recognizer, and the rank-4 witness family.

use std::error::Error;
use std::fmt;

use crate::completion::Presentation;
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlacticError {
    InvalidRank { rank: u32, min: u32 },
    InvalidWitnessIndex { index: usize },
    AlphabetMismatch { letter: u32, alphabet: u32 },
}

impl fmt::Display for PlacticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlacticError::InvalidRank { rank, min } => {
                write!(f, "rank {rank} too small (need at least {min})")
            }
            PlacticError::InvalidWitnessIndex { index } => {
                write!(f, "witness index {index} too small (need at least 1)")
            }
            PlacticError::AlphabetMismatch { letter, alphabet } => {
                write!(f, "letter {letter} outside alphabet 1..={alphabet}")
            }
        }
    }
}

impl Error for PlacticError {}

fn word_of(values: &[u32]) -> Word {
    values.iter().map(|&v| Letter::new(v)).collect()
}

/// The Knuth presentation of the plactic monoid of rank `n`:
/// `jik = jki` and `ikj = kij` for `i < j < k`, together with
/// `jii = iji` and `jij = jji` for `i < j`.
pub fn knuth_presentation(n: u32) -> Result<Presentation, PlacticError> {
    if n < 1 {
        return Err(PlacticError::InvalidRank { rank: n, min: 1 });
    }
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((word_of(&[j, i, i]), word_of(&[i, j, i])));
            pairs.push((word_of(&[j, i, j]), word_of(&[j, j, i])));
            for k in j + 1..=n {
                pairs.push((word_of(&[j, i, k]), word_of(&[j, k, i])));
                pairs.push((word_of(&[i, k, j]), word_of(&[k, i, j])));
            }
        }
    }
    Ok(Presentation::new(n, pairs).expect("Knuth relations are valid"))
}

/// The Chinese presentation of rank `n`: for `i <= j <= k` not all equal,
/// the words `kji`, `kij` and `jki` are pairwise identified. Coincides with
/// the Knuth presentation for `n < 3`.
pub fn chinese_presentation(n: u32) -> Result<Presentation, PlacticError> {
    if n < 1 {
        return Err(PlacticError::InvalidRank { rank: n, min: 1 });
    }
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            for k in j..=n {
                if i == j && j == k {
                    continue;
                }
                let triple = [
                    word_of(&[k, j, i]),
                    word_of(&[k, i, j]),
                    word_of(&[j, k, i]),
                ];
                for a in 0..triple.len() {
                    for b in a + 1..triple.len() {
                        if triple[a] != triple[b] {
                            pairs.push((triple[a].clone(), triple[b].clone()));
                        }
                    }
                }
            }
        }
    }
    Ok(Presentation::new(n, pairs).expect("Chinese relations are valid"))
}

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase, row lengths weakly decrease top to bottom.
///
/// The canonical representative of a plactic congruence class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauError {
    EmptyRow { row: usize },
    RowNotWeaklyIncreasing { row: usize },
    ColumnNotStrictlyIncreasing { row: usize, column: usize },
    RowLengthsIncrease { row: usize },
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauError::EmptyRow { row } => write!(f, "row {row} is empty"),
            TableauError::RowNotWeaklyIncreasing { row } => {
                write!(f, "row {row} is not weakly increasing")
            }
            TableauError::ColumnNotStrictlyIncreasing { row, column } => {
                write!(f, "column {column} fails strict increase at row {row}")
            }
            TableauError::RowLengthsIncrease { row } => {
                write!(f, "row {row} is longer than the row above")
            }
        }
    }
}

impl Error for TableauError {}

impl Tableau {
    pub fn empty() -> Self {
        Tableau::default()
    }

    /// Builds a tableau from explicit rows, validating all invariants.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Tableau, TableauError> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(TableauError::EmptyRow { row: r });
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(TableauError::RowNotWeaklyIncreasing { row: r });
            }
            if r > 0 {
                if row.len() > rows[r - 1].len() {
                    return Err(TableauError::RowLengthsIncrease { row: r });
                }
                for (c, &entry) in row.iter().enumerate() {
                    if rows[r - 1][c] >= entry {
                        return Err(TableauError::ColumnNotStrictlyIncreasing {
                            row: r,
                            column: c,
                        });
                    }
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Schensted row insertion: `x` enters the first row; if every entry is
    /// `<= x` it appends, otherwise it bumps the leftmost entry strictly
    /// greater than `x`, which inserts into the next row.
    pub fn insert(&self, x: Letter) -> Tableau {
        let mut next = self.clone();
        next.insert_mut(x);
        next
    }

    fn insert_mut(&mut self, x: Letter) {
        let mut carry = x;
        for row in &mut self.rows {
            let bump = row.partition_point(|&entry| entry <= carry);
            if bump == row.len() {
                row.push(carry);
                return;
            }
            std::mem::swap(&mut carry, &mut row[bump]);
        }
        self.rows.push(vec![carry]);
    }
}

/// Left fold of [`Tableau::insert`] over the letters of `w`.
pub fn tableau_of_word(word: &Word) -> Tableau {
    let mut tableau = Tableau::empty();
    for &letter in word.letters() {
        tableau.insert_mut(letter);
    }
    tableau
}

/// The columns of `t` read left to right, each bottom to top, as separate
/// (strictly decreasing) words. Adjacent factors satisfy
/// [`factor_precedes`].
pub fn column_factors(tableau: &Tableau) -> Vec<Word> {
    let rows = tableau.rows();
    let width = rows.first().map_or(0, |r| r.len());
    let mut factors = Vec::with_capacity(width);
    for column in 0..width {
        let column_word: Word = rows
            .iter()
            .rev()
            .filter(|row| row.len() > column)
            .map(|row| row[column])
            .collect();
        factors.push(column_word);
    }
    debug_assert!(factors
        .windows(2)
        .all(|pair| factor_precedes(&pair[0], &pair[1])));
    factors
}

/// Concatenation of the column factors: the standard tableaux form of the
/// class, the unique factorization into decreasing words `w1 w2 ... wk`
/// with `wi` preceding `w(i+1)`.
pub fn column_reading(tableau: &Tableau) -> Word {
    column_factors(tableau)
        .iter()
        .fold(Word::empty(), |acc, factor| acc.concat(factor))
}

/// The precedence relation on decreasing factors: writing
/// `v = v_m ... v_1` and `u = u_q ... u_1` (indices from the right),
/// `v` precedes `u` when `m >= q` and `v_i <= u_i` for `i = 1..=q`.
pub fn factor_precedes(v: &Word, u: &Word) -> bool {
    let vs = v.letters();
    let us = u.letters();
    if vs.len() < us.len() {
        return false;
    }
    (1..=us.len()).all(|i| vs[vs.len() - i] <= us[us.len() - i])
}

/// Recognizes the two rank-3 irreducible-word families
/// `1^i (21)^j 2^k (321)^l (32)^m 3^q` and
/// `1^i (21)^j (31)^k (321)^l (32)^m 3^q`.
pub fn is_rank3_normal_form(word: &Word) -> Result<bool, PlacticError> {
    if let Some(letter) = word.max_letter() {
        if letter.value() > 3 {
            return Err(PlacticError::AlphabetMismatch {
                letter: letter.value(),
                alphabet: 3,
            });
        }
    }
    const FAMILY_A: [&[u32]; 6] = [&[1], &[2, 1], &[2], &[3, 2, 1], &[3, 2], &[3]];
    const FAMILY_B: [&[u32]; 6] = [&[1], &[2, 1], &[3, 1], &[3, 2, 1], &[3, 2], &[3]];
    Ok(matches_block_family(word, &FAMILY_A) || matches_block_family(word, &FAMILY_B))
}

/// Greedy block matching is exact here: at each stage boundary the next
/// letter determines whether the current block repeats, so no backtracking
/// can rescue a failed greedy parse.
fn matches_block_family(word: &Word, blocks: &[&[u32]]) -> bool {
    let letters = word.letters();
    let mut pos = 0;
    for block in blocks {
        loop {
            let fits = letters.len() - pos >= block.len()
                && block
                    .iter()
                    .zip(&letters[pos..])
                    .all(|(&b, l)| b == l.value());
            if !fits {
                break;
            }
            pos += block.len();
        }
    }
    pos == letters.len()
}

/// The witness family showing that rank `>= 4` admits no finite basis:
/// for each `i >= 1` the word `32 3^i 431` forces its own reduction rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Witness {
    pub index: usize,
    /// `32 3^i 431`; heads a reduction in any basis.
    pub witness: Word,
    /// `32 3^i 43`: the witness minus its final letter, minimal in its class.
    pub minimal_prefix: Word,
    /// `2 3^i 431`: the witness minus its first letter, minimal in its class.
    pub minimal_suffix: Word,
    /// `3 2 1 3^i 4 3`: a deglex-smaller word equal to the witness in the
    /// monoid, so the witness itself must be reducible.
    pub congruent_form: Word,
}

pub fn theorem2_witness(n: u32, index: usize) -> Result<Theorem2Witness, PlacticError> {
    if n < 4 {
        return Err(PlacticError::InvalidRank { rank: n, min: 4 });
    }
    if index < 1 {
        return Err(PlacticError::InvalidWitnessIndex { index });
    }
    let threes = |count: usize| std::iter::repeat_n(3u32, count);
    let witness: Vec<u32> = [3, 2]
        .into_iter()
        .chain(threes(index))
        .chain([4, 3, 1])
        .collect();
    let minimal_prefix: Vec<u32> = [3, 2].into_iter().chain(threes(index)).chain([4, 3]).collect();
    let minimal_suffix: Vec<u32> = [2].into_iter().chain(threes(index)).chain([4, 3, 1]).collect();
    let congruent_form: Vec<u32> = [3, 2, 1]
        .into_iter()
        .chain(threes(index))
        .chain([4, 3])
        .collect();
    let result = Theorem2Witness {
        index,
        witness: word_of(&witness),
        minimal_prefix: word_of(&minimal_prefix),
        minimal_suffix: word_of(&minimal_suffix),
        congruent_form: word_of(&congruent_form),
    };
    debug_assert_eq!(result.witness.len(), index + 5);
    debug_assert_eq!(
        result.witness,
        word_of(&[3]).concat(&result.minimal_suffix)
    );
    debug_assert_eq!(
        result.witness,
        result.minimal_prefix.concat(&word_of(&[1]))
    );
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{max_decreasing_subsequence, parse_word};

    fn w(text: &str) -> Word {
        parse_word(text, 9).unwrap()
    }

    fn row(values: &[u32]) -> Vec<Letter> {
        values.iter().map(|&v| Letter::new(v)).collect()
    }

    #[test]
    fn knuth_presentation_counts() {
        assert!(knuth_presentation(1).unwrap().relations().is_empty());
        let p2 = knuth_presentation(2).unwrap();
        assert_eq!(
            p2.relations(),
            &[(w("121"), w("211")), (w("212"), w("221"))]
        );
        assert_eq!(knuth_presentation(3).unwrap().relations().len(), 8);
        assert_eq!(knuth_presentation(4).unwrap().relations().len(), 20);
        assert!(knuth_presentation(0).is_err());
    }

    #[test]
    fn knuth3_orients_to_the_first_eight_rules() {
        let rules = knuth_presentation(3).unwrap().oriented_rules();
        let rendered: Vec<(Word, Word)> = rules
            .iter()
            .map(|r| (r.lhs().clone(), r.rhs().clone()))
            .collect();
        for (lhs, rhs) in [
            ("332", "323"),
            ("322", "232"),
            ("331", "313"),
            ("311", "131"),
            ("221", "212"),
            ("211", "121"),
            ("231", "213"),
            ("312", "132"),
        ] {
            assert!(rendered.contains(&(w(lhs), w(rhs))), "missing {lhs} -> {rhs}");
        }
        assert_eq!(rules.len(), 8);
    }

    #[test]
    fn chinese_presentation_examples() {
        assert!(chinese_presentation(1).unwrap().relations().is_empty());
        // Rank 2: the Chinese and Knuth relation sets literally coincide.
        assert_eq!(
            chinese_presentation(2).unwrap(),
            knuth_presentation(2).unwrap()
        );
        let p3 = chinese_presentation(3).unwrap();
        assert_eq!(p3.relations().len(), 9);
        // The all-distinct triple identifies 321, 312 and 231 pairwise.
        assert!(p3.relations().contains(&(w("231"), w("321"))));
        assert!(p3.relations().contains(&(w("231"), w("312"))));
        assert!(p3.relations().contains(&(w("312"), w("321"))));
        assert!(chinese_presentation(0).is_err());
    }

    #[test]
    fn insert_examples() {
        let t = Tableau::empty().insert(Letter::new(2));
        assert_eq!(t.rows(), &[row(&[2])]);

        let t = Tableau::from_rows(vec![row(&[2, 3, 4])]).unwrap();
        let t = t.insert(Letter::new(3));
        assert_eq!(t.rows(), &[row(&[2, 3, 3]), row(&[4])]);

        let t = Tableau::from_rows(vec![row(&[2, 3, 3]), row(&[4])]).unwrap();
        let t = t.insert(Letter::new(1));
        assert_eq!(t.rows(), &[row(&[1, 3, 3]), row(&[2]), row(&[4])]);
    }

    #[test]
    fn insert_grows_by_one_cell() {
        let t = tableau_of_word(&w("3141592653"));
        let bigger = t.insert(Letter::new(2));
        assert_eq!(bigger.cell_count(), t.cell_count() + 1);
        Tableau::from_rows(bigger.rows().to_vec()).expect("still semistandard");
    }

    #[test]
    fn tableau_of_word_examples() {
        let t = tableau_of_word(&w("23431"));
        assert_eq!(t.rows(), &[row(&[1, 3, 3]), row(&[2]), row(&[4])]);
        assert_eq!(tableau_of_word(&Word::empty()), Tableau::empty());
        assert_eq!(tableau_of_word(&w("121")), tableau_of_word(&w("211")));
        assert_eq!(
            tableau_of_word(&w("121")).rows(),
            &[row(&[1, 1]), row(&[2])]
        );
    }

    #[test]
    fn column_reading_examples() {
        let t = Tableau::from_rows(vec![row(&[1, 3, 3]), row(&[2]), row(&[4])]).unwrap();
        assert_eq!(column_reading(&t), w("42133"));
        assert_eq!(column_reading(&Tableau::empty()), Word::empty());

        let t = Tableau::from_rows(vec![
            row(&[1, 1, 1, 2, 2, 2, 2, 4]),
            row(&[2, 2, 3, 3]),
            row(&[4, 4]),
        ])
        .unwrap();
        assert_eq!(column_reading(&t), w("42142131322224"));
        let factors = column_factors(&t);
        let rendered: Vec<Word> = ["421", "421", "31", "32", "2", "2", "2", "4"]
            .iter()
            .map(|s| w(s))
            .collect();
        assert_eq!(factors, rendered);
    }

    #[test]
    fn reading_word_reproduces_tableau() {
        for text in ["23431", "1321223", "33221121", "44332211"] {
            let t = tableau_of_word(&w(text));
            assert_eq!(tableau_of_word(&column_reading(&t)), t);
        }
    }

    #[test]
    fn row_count_matches_decreasing_subsequence() {
        for text in ["321", "21433", "111", "23431", "1321223"] {
            let word = w(text);
            assert_eq!(
                tableau_of_word(&word).row_count(),
                max_decreasing_subsequence(&word)
            );
        }
    }

    #[test]
    fn factor_precedence_examples() {
        assert!(factor_precedes(&w("421"), &w("421")));
        assert!(factor_precedes(&w("421"), &w("3")));
        assert!(!factor_precedes(&w("3"), &w("421")));
        assert!(factor_precedes(&w("31"), &w("32")));
        assert!(!factor_precedes(&w("32"), &w("31")));
        assert!(factor_precedes(&w("32"), &w("2")));
    }

    #[test]
    fn chinese_growth_matches_plactic_growth() {
        // Same growth function rank for rank: equal class counts degree by
        // degree, even though the partitions differ from rank 3 on.
        use crate::oracle::{count_classes, OracleBudget};
        let budget = OracleBudget::default();
        for n in 2..=4u32 {
            let knuth = knuth_presentation(n).unwrap();
            let chinese = chinese_presentation(n).unwrap();
            for degree in 0..=4usize {
                assert_eq!(
                    count_classes(&knuth, degree, &budget).unwrap(),
                    count_classes(&chinese, degree, &budget).unwrap(),
                    "growth differs at rank {n}, degree {degree}"
                );
            }
        }
    }

    #[test]
    fn rank3_normal_form_examples() {
        assert!(is_rank3_normal_form(&w("32132")).unwrap());
        assert!(!is_rank3_normal_form(&w("231")).unwrap());
        assert!(is_rank3_normal_form(&Word::empty()).unwrap());
        assert!(is_rank3_normal_form(&w("2321")).unwrap());
        assert!(!is_rank3_normal_form(&w("3212")).unwrap());
        assert!(is_rank3_normal_form(&w("31")).unwrap());
        assert!(is_rank3_normal_form(&w("13")).unwrap());
        assert!(matches!(
            is_rank3_normal_form(&w("14")),
            Err(PlacticError::AlphabetMismatch { letter: 4, .. })
        ));
    }

    #[test]
    fn tableau_from_rows_rejects_invalid() {
        assert!(matches!(
            Tableau::from_rows(vec![row(&[2, 1])]),
            Err(TableauError::RowNotWeaklyIncreasing { row: 0 })
        ));
        assert!(matches!(
            Tableau::from_rows(vec![row(&[1, 2]), row(&[1])]),
            Err(TableauError::ColumnNotStrictlyIncreasing { row: 1, column: 0 })
        ));
        assert!(matches!(
            Tableau::from_rows(vec![row(&[1]), row(&[2, 3])]),
            Err(TableauError::RowLengthsIncrease { row: 1 })
        ));
        assert!(matches!(
            Tableau::from_rows(vec![row(&[1]), vec![]]),
            Err(TableauError::EmptyRow { row: 1 })
        ));
    }

    #[test]
    fn witness_examples() {
        let wit = theorem2_witness(4, 1).unwrap();
        assert_eq!(wit.witness, w("323431"));
        assert_eq!(wit.minimal_prefix, w("32343"));
        assert_eq!(wit.minimal_suffix, w("23431"));
        assert_eq!(wit.congruent_form, w("321343"));

        let wit = theorem2_witness(4, 2).unwrap();
        assert_eq!(wit.witness, w("3233431"));
        assert_eq!(wit.minimal_prefix, w("323343"));
        assert_eq!(wit.minimal_suffix, w("233431"));
        assert_eq!(wit.congruent_form, w("3213343"));

        assert!(matches!(
            theorem2_witness(4, 0),
            Err(PlacticError::InvalidWitnessIndex { index: 0 })
        ));
        assert!(matches!(
            theorem2_witness(3, 1),
            Err(PlacticError::InvalidRank { rank: 3, min: 4 })
        ));
    }

    #[test]
    fn witness_tableau_forms() {
        // The standard form of 2 3^i 431 is (421) 3^(i+1).
        for i in 1..=3usize {
            let wit = theorem2_witness(4, i).unwrap();
            let factors = column_factors(&tableau_of_word(&wit.minimal_suffix));
            assert_eq!(factors[0], w("421"));
            assert_eq!(factors.len(), i + 2);
            for factor in &factors[1..] {
                assert_eq!(factor, &w("3"));
            }
        }
        // The competing family 143 3^j 2 3^(i-j) reads as (431) 2 3^i.
        let other = w("14332");
        let factors = column_factors(&tableau_of_word(&other));
        assert_eq!(
            factors,
            vec![w("431"), w("2"), w("3")],
            "standard form of 14332 should be (431)(2)(3)"
        );
    }
}
