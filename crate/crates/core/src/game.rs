//! The deletion game: starting from a word chosen by the first player, the
//! players alternately delete one letter, the second player moving first.
//! The game stops as soon as the word is a palindrome or an antipalindrome,
//! and its value is the number of moves made. The first player (who chose
//! the word) maximizes it, the second player minimizes it.
//!
//! Every word of length at most 2 is symmetric, so a game on a word of
//! length `l` lasts at most `max(0, l - 2)` moves.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subseq::sd;
use crate::word::{Letter, SymmetryClass, Word};

/// Longest starting word accepted by the exact solver.
pub const SOLVER_MAX_LEN: usize = 20;
/// Longest word length scanned by [`g1`].
pub const G1_MAX_LEN: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mover {
    /// The second player; moves first and minimizes the move count.
    Minimizer,
    /// The first player; chose the word and maximizes the move count.
    Maximizer,
}

impl Mover {
    pub fn other(self) -> Mover {
        match self {
            Mover::Minimizer => Mover::Maximizer,
            Mover::Maximizer => Mover::Minimizer,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    /// 1-based index into the current word.
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameState {
    pub word: Word,
    pub mover: Mover,
    /// Letter removed by the previous move, if any. Only the mirror
    /// heuristic looks at it.
    pub last_deleted: Option<Letter>,
}

impl GameState {
    pub fn initial(word: Word) -> GameState {
        GameState {
            word,
            mover: Mover::Minimizer,
            last_deleted: None,
        }
    }

    pub fn is_terminal(&self) -> bool {
        self.word.is_symmetric()
    }

    pub fn play(&self, mv: Move) -> Result<GameState> {
        if self.is_terminal() {
            return Err(Error::TerminalState);
        }
        let next = self.word.delete(mv.position)?;
        Ok(GameState {
            word: next,
            mover: self.mover.other(),
            last_deleted: Some(self.word.letter(mv.position)),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameOutcome {
    pub value: usize,
    pub principal_line: Vec<usize>,
}

pub fn legal_moves(s: &GameState) -> Result<Vec<Move>> {
    if s.is_terminal() {
        return Err(Error::TerminalState);
    }
    Ok((1..=s.word.len())
        .map(|position| Move { position })
        .collect())
}

/// Positions that start a run of equal letters. Deleting anywhere inside a
/// run gives the same successor, so these are the distinct moves, and each
/// is the lowest position producing its successor.
fn distinct_moves(w: Word) -> impl Iterator<Item = usize> {
    (1..=w.len()).filter(move |&p| p == 1 || w.letter(p) != w.letter(p - 1))
}

/// Exact minimax with a transposition table keyed by `(word, mover)`.
///
/// The table may be reused across many starting words; every position
/// reachable from any word is itself just a word.
#[derive(Debug, Default)]
pub struct GameSolver {
    memo: HashMap<(Word, Mover), u8>,
    max_length: usize,
}

impl GameSolver {
    pub fn new() -> Self {
        GameSolver {
            memo: HashMap::new(),
            max_length: SOLVER_MAX_LEN,
        }
    }

    pub fn with_max_length(max_length: usize) -> Self {
        GameSolver {
            memo: HashMap::new(),
            max_length,
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn guard(&self, w: Word) -> Result<()> {
        if w.len() > self.max_length {
            return Err(Error::LengthBudgetExceeded {
                what: "game solver",
                length: w.len(),
                limit: self.max_length,
            });
        }
        Ok(())
    }

    /// Number of remaining moves under optimal play with `mover` to move.
    pub fn value(&mut self, w: Word, mover: Mover) -> Result<usize> {
        self.guard(w)?;
        Ok(self.solve(w, mover) as usize)
    }

    fn solve(&mut self, w: Word, mover: Mover) -> u8 {
        if w.is_symmetric() {
            return 0;
        }
        if let Some(&v) = self.memo.get(&(w, mover)) {
            return v;
        }
        let next = mover.other();
        let mut best: Option<u8> = None;
        for p in distinct_moves(w) {
            let child = w.delete(p).expect("position in range");
            let v = self.solve(child, next);
            best = Some(match (best, mover) {
                (None, _) => v,
                (Some(b), Mover::Minimizer) => b.min(v),
                (Some(b), Mover::Maximizer) => b.max(v),
            });
        }
        let v = 1 + best.expect("a non-symmetric word has at least three letters");
        self.memo.insert((w, mover), v);
        v
    }

    /// The lowest position among the optimal moves for `mover`.
    pub fn best_move(&mut self, w: Word, mover: Mover) -> Result<Move> {
        self.guard(w)?;
        if w.is_symmetric() {
            return Err(Error::TerminalState);
        }
        let target = self.solve(w, mover) - 1;
        let next = mover.other();
        for p in distinct_moves(w) {
            let child = w.delete(p)?;
            if self.solve(child, next) == target {
                return Ok(Move { position: p });
            }
        }
        unreachable!("the minimax value is attained by some move")
    }

    pub fn outcome(&mut self, w: Word) -> Result<GameOutcome> {
        self.guard(w)?;
        let value = self.solve(w, Mover::Minimizer) as usize;
        let mut line = Vec::with_capacity(value);
        let mut state = GameState::initial(w);
        while !state.is_terminal() {
            let mv = self.best_move(state.word, state.mover)?;
            line.push(mv.position);
            state = state.play(mv)?;
        }
        debug_assert_eq!(line.len(), value);
        Ok(GameOutcome {
            value,
            principal_line: line,
        })
    }
}

pub fn game_value(w: Word) -> Result<GameOutcome> {
    GameSolver::new().outcome(w)
}

/// `g1(n)`: the best game value the first player can secure by choosing a
/// word of length `n`, with the lexicographically least word attaining it.
pub fn g1(n: usize) -> Result<(usize, Word)> {
    let mut solver = GameSolver::new();
    g1_with(&mut solver, n)
}

pub fn g1_with(solver: &mut GameSolver, n: usize) -> Result<(usize, Word)> {
    if n < 1 {
        return Err(Error::Domain {
            what: "g1",
            n: n as i64,
            min: 1,
        });
    }
    if n > G1_MAX_LEN {
        return Err(Error::LengthBudgetExceeded {
            what: "g1 scan",
            length: n,
            limit: G1_MAX_LEN,
        });
    }
    let mut best = (0usize, Word::all_of_length(n).next().expect("n >= 1"));
    for w in Word::all_of_length(n) {
        let v = solver.value(w, Mover::Minimizer)?;
        if v > best.0 {
            best = (v, w);
        }
    }
    Ok(best)
}

/// `a^k b^{k+2}` for even `n`, `a^k b^{k+3}` for odd `n`.
pub fn paper_strategy_word(n: usize) -> Result<Word> {
    if n < 6 {
        return Err(Error::Domain {
            what: "strategy word",
            n: n as i64,
            min: 6,
        });
    }
    let (k, extra) = if n.is_multiple_of(2) {
        ((n - 2) / 2, 2)
    } else {
        ((n - 3) / 2, 3)
    };
    Word::repeat(Letter::A, k)?.concat(Word::repeat(Letter::B, k + extra)?)
}

/// Answer a deletion of `opponent_deleted` by deleting the leftmost
/// occurrence of the other letter, or position 1 if none is left.
pub fn mirror_move(current: Word, opponent_deleted: Letter) -> Result<Move> {
    if current.is_symmetric() {
        return Err(Error::TerminalState);
    }
    let want = opponent_deleted.complement();
    let position = current
        .letters()
        .position(|l| l == want)
        .map_or(1, |i| i + 1);
    Ok(Move { position })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EngineMode {
    Exact,
    Heuristic,
}

/// Chooses a move for `s.mover`.
///
/// `Exact` plays the first move of the principal line. `Heuristic` mirrors
/// the previous deletion when maximizing (position 1 when there is none),
/// and when minimizing picks the leftmost move whose successor has the
/// smallest value, using the exact value within the solver guard and the
/// deletion distance beyond it.
pub fn engine_move(solver: &mut GameSolver, s: &GameState, mode: EngineMode) -> Result<Move> {
    if s.is_terminal() {
        return Err(Error::TerminalState);
    }
    match mode {
        EngineMode::Exact => solver.best_move(s.word, s.mover),
        EngineMode::Heuristic => match s.mover {
            Mover::Maximizer => match s.last_deleted {
                Some(letter) => mirror_move(s.word, letter),
                None => Ok(Move { position: 1 }),
            },
            Mover::Minimizer => {
                let exact = s.word.len() <= solver.max_length;
                let mut best: Option<(usize, usize)> = None;
                for p in distinct_moves(s.word) {
                    let child = s.word.delete(p)?;
                    let score = if exact {
                        solver.solve(child, Mover::Maximizer) as usize
                    } else {
                        sd(child).value
                    };
                    if best.is_none_or(|(b, _)| score < b) {
                        best = Some((score, p));
                    }
                }
                let (_, position) = best.expect("non-terminal word has moves");
                Ok(Move { position })
            }
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptMove {
    pub mover: Mover,
    pub position: usize,
    pub letter: Letter,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub initial: Word,
    pub moves: Vec<TranscriptMove>,
    pub final_kind: SymmetryClass,
    pub move_count: usize,
}

impl Transcript {
    pub fn new(initial: Word) -> Self {
        Transcript {
            initial,
            moves: Vec::new(),
            final_kind: initial.symmetry_class(),
            move_count: 0,
        }
    }

    pub fn push(&mut self, before: &GameState, mv: Move) -> Result<GameState> {
        let after = before.play(mv)?;
        self.moves.push(TranscriptMove {
            mover: before.mover,
            position: mv.position,
            letter: before.word.letter(mv.position),
            word: after.word,
        });
        self.move_count = self.moves.len();
        self.final_kind = after.word.symmetry_class();
        Ok(after)
    }

    /// Replays a sequence of positions from `initial`.
    pub fn replay(initial: Word, positions: &[usize]) -> Result<Transcript> {
        let mut t = Transcript::new(initial);
        let mut state = GameState::initial(initial);
        for &position in positions {
            state = t.push(&state, Move { position })?;
        }
        Ok(t)
    }
}
