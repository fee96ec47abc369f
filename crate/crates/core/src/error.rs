use thiserror::Error;

#[derive(Error, Debug)]
pub enum LieError {
    #[error("unknown Cartan type label `{0}`")]
    UnknownType(String),
    #[error("`{0}` is not a root of this system")]
    BadRoot(String),
    #[error("simple-root index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("unknown orbit label `{0}`")]
    UnknownOrbit(String),
    #[error("partition violates the {0} parity constraint: {1}")]
    Parity(&'static str, String),
    #[error("Weyl word is not the minimal representative of its double coset")]
    NotMinimalCoset,
    #[error("no Heisenberg partner in the set for roots: {0}")]
    PairingFailure(String),
    #[error("projection is not a homomorphism on the pair ({0}, {1})")]
    NotHomomorphism(String, String),
    #[error("root set is not closed under commutation: {0}")]
    NotClosed(String),
    #[error("module is not stable under the Levi bracket (root {0})")]
    ModuleNotStable(String),
    #[error("generator {0} does not normalize the unipotent group")]
    DoesNotNormalize(String),
    #[error("operation invalid here: {0}")]
    Invalid(String),
    #[error("orbit catalog inconsistent: {0}")]
    CatalogInconsistent(String),
    #[error("prime must be odd, got {0}")]
    EvenPrime(u64),
    #[error("p^n = {0} exceeds the memory guard (10^7)")]
    MemoryGuard(u128),
}
