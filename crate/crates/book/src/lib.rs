//! Runs the code in the guide under `book/` as doc-tests. One module per
//! chapter, so a failure points at its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/structural-data.md")]
pub mod structural_data {}
#[doc = include_str!("../../../book/src/majorization.md")]
pub mod majorization {}
#[doc = include_str!("../../../book/src/completion.md")]
pub mod completion {}
#[doc = include_str!("../../../book/src/rings.md")]
pub mod rings {}
#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
