from .apex import check_apex_hypotheses, make_apex_gadget, make_simplicity_witness
from .cliques import attach_apex, make_clique_transversal_gadget, make_H_t_d
from .join_gadget import make_join_gadget
from .senders import chain_senders, make_path_sender, make_weak_bel_frame, weak_to_strong_frame

__all__ = [
    "check_apex_hypotheses",
    "make_apex_gadget",
    "make_simplicity_witness",
    "attach_apex",
    "make_clique_transversal_gadget",
    "make_H_t_d",
    "make_join_gadget",
    "chain_senders",
    "make_path_sender",
    "make_weak_bel_frame",
    "weak_to_strong_frame",
]
