use std::io::{BufRead, Write};

use super::{CliError, CliResult, EXIT_OK, EXIT_USAGE};
use crate::game::{engine_move, EngineMode, GameSolver, GameState, Move, Mover, Transcript};
use crate::word::Word;

fn show(out: &mut dyn Write, w: Word) -> std::io::Result<()> {
    let width = w.len().to_string().len().max(1);
    let positions: Vec<String> = (1..=w.len()).map(|p| format!("{p:>width$}")).collect();
    let letters: Vec<String> = w.letters().map(|l| format!("{l:>width$}")).collect();
    writeln!(out, "  {}", positions.join(" "))?;
    writeln!(out, "  {}", letters.join(" "))
}

fn role(m: Mover) -> &'static str {
    match m {
        Mover::Minimizer => "second player",
        Mover::Maximizer => "first player",
    }
}

/// Interactive loop. The human plays `human`; malformed input re-prompts.
pub(super) fn run(
    word: Word,
    human: Mover,
    mode: EngineMode,
    json: bool,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> CliResult {
    let mut solver = GameSolver::new();
    if mode == EngineMode::Exact && word.len() > crate::game::SOLVER_MAX_LEN {
        return Err(crate::error::Error::LengthBudgetExceeded {
            what: "game solver",
            length: word.len(),
            limit: crate::game::SOLVER_MAX_LEN,
        }
        .into());
    }
    writeln!(
        out,
        "you are the {}; the second player moves first",
        role(human)
    )?;
    let mut transcript = Transcript::new(word);
    let mut state = GameState::initial(word);
    let mut line = String::new();
    while !state.is_terminal() {
        writeln!(out)?;
        show(out, state.word)?;
        let mv = if state.mover == human {
            loop {
                write!(out, "delete position (1-{}): ", state.word.len())?;
                out.flush()?;
                line.clear();
                if input.read_line(&mut line)? == 0 {
                    writeln!(out)?;
                    writeln!(out, "input ended before the game finished")?;
                    return Ok(EXIT_USAGE);
                }
                match line.trim().parse::<usize>() {
                    Ok(p) if (1..=state.word.len()).contains(&p) => break Move { position: p },
                    _ => writeln!(out, "not a valid position: {:?}", line.trim())?,
                }
            }
        } else {
            let mv = engine_move(&mut solver, &state, mode).map_err(CliError::from)?;
            writeln!(
                out,
                "engine deletes position {} ({})",
                mv.position,
                state.word.letter(mv.position)
            )?;
            mv
        };
        state = transcript.push(&state, mv)?;
    }
    writeln!(out)?;
    show(out, state.word)?;
    writeln!(
        out,
        "game over after {} moves: {}",
        transcript.move_count, transcript.final_kind
    )?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&transcript)?)?;
    }
    Ok(EXIT_OK)
}
