pub mod appell;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod polyseq;
pub mod rational;
pub mod riordan;
pub mod series;
pub mod triangle;

#[cfg(test)]
mod testutil;
