use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed triangulation document: {0}")]
    Malformed(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("tetrahedron count must be positive")]
    Empty,

    #[error("face {face} of tetrahedron {tet} is unglued")]
    UngluedFace { tet: usize, face: usize },

    #[error("face {face} of tetrahedron {tet} refers to missing tetrahedron {target}")]
    BadTarget { tet: usize, face: usize, target: usize },

    #[error("face {face} of tetrahedron {tet}: corner correspondence {corners:?} is not a bijection onto face {target_face}")]
    BadCorners { tet: usize, face: usize, target_face: usize, corners: Vec<usize> },

    #[error("face {face} of tetrahedron {tet} is glued to itself")]
    SelfGluedFace { tet: usize, face: usize },

    #[error("face {face} of tetrahedron {tet} is glued more than once or the pairing is not involutive (partner tetrahedron {partner_tet} face {partner_face})")]
    NotInvolutive { tet: usize, face: usize, partner_tet: usize, partner_face: usize },

    #[error("complex is not orientable: parity conflict across face {face} of tetrahedron {tet}")]
    NonOrientable { tet: usize, face: usize },

    #[error("edge class {edge} is identified with itself in reverse (tetrahedron {tet})")]
    ReversedEdge { edge: usize, tet: usize },

    #[error("link of vertex {vertex} is not a closed connected surface: {reason}")]
    BadLink { vertex: usize, reason: String },

    #[error("corner {corner} does not lie in face {face}")]
    CornerNotInFace { face: usize, corner: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("integer overflow while evaluating a chain")]
    Overflow,

    #[error("inadmissible quadrilateral coordinates: {0}")]
    Inadmissible(String),

    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },
}

impl Error {
    /// True for errors raised while validating gluing data.
    pub fn is_triangulation_error(&self) -> bool {
        !matches!(
            self,
            Error::MalformedInput(_)
                | Error::Dimension { .. }
                | Error::Overflow
                | Error::Inadmissible(_)
                | Error::OutOfRange { .. }
        )
    }
}
