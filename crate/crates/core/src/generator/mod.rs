//! Earth map tilings, their flip modifications and the sporadic tilings.

mod counts;
mod emt;
mod flips;
mod search;
mod sporadic;
mod sporadic_data;

pub use counts::{q1, q_table};
pub use emt::{build_emt, EarthMap};
pub use flips::{
    apply_flips, flip_quad, count_flip_tilings, enumerate_flip_tilings, gap_multisets, printed_count, FlipSpec,
};
pub use search::search_tilings;
pub use sporadic::{sporadic, sporadic_quad, SporadicId};
