//! Holds the `acceptance` test target for `simpath`; there is no library
//! code here. Run it with `cargo test -p simpath-acceptance`.
