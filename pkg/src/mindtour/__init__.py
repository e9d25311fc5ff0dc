"""mindtour: conversational affect engine and tourist concierge.

Pipeline: case-frame utterance -> favorite values -> three-axis emotion
vector -> emotion types and 9-group strengths -> 7-state mental-state
machine -> feeling profile -> nearest-profile spot recommendation.
"""

from .case_frames import (
    CaseFrame,
    CaseFrameError,
    DuplicateSlotError,
    EventKind,
    EventTypeSignature,
    NotationSyntaxError,
    SIGNATURES,
    SlotRole,
    UnknownEmotionTagError,
    UnknownSignatureError,
    parse_case_frame,
    render_case_frame,
    signature_of,
)
from .config import EngineConfig, load_config
from .elicitation import (
    Approval,
    ContextError,
    Desirability,
    ElicitationContext,
    EmotionInstance,
    EmotionType,
    GroupVector,
    Party,
    Prospect,
    elicit_emotions,
    group_vector,
)
from .emotion_space import (
    AxisAssignment,
    EgcResult,
    Octant,
    Valence,
    assign_axes,
    classify_octant,
    egc_evaluate,
    intensity,
)
from .favorites import (
    FavoriteRangeError,
    FvDatabase,
    FvStore,
    LexiconFormatError,
    Provenance,
    load_fv_file,
    save_fv_file,
)
from .mental_states import (
    MentalState,
    RowSumError,
    StateMachine,
    TransitionModel,
    ZeroStimulusError,
    load_transition_table,
    select_transition,
)
from .recommend import (
    EmptyCatalogError,
    FeelingVector6,
    RankedSpot,
    SpotProfile,
    UserAffectProfile,
    feeling_vector_from_groups,
    groups_from_feelings,
    haversine_km,
    load_spot_catalog,
    rank_spots,
    update_user_profile,
)
from .session import Engine, Session, TurnReport, UnknownSessionError, context_from_flags

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
