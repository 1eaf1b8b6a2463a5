pub mod algebra;
pub mod combinatorics;
pub mod symbols;
pub mod symfunc;
pub mod hall_littlewood;
pub mod lusztig_shoji;
pub mod wreath;
pub mod green;
pub mod cli;
