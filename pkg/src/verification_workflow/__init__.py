from .paper_workflow import PaperVerificationWorkflow, state_to_report
from .state_manager import StateManager, VerificationState
from .workflow_nodes import VerificationNodes, check

__all__ = [
    "PaperVerificationWorkflow",
    "state_to_report",
    "StateManager",
    "VerificationState",
    "VerificationNodes",
    "check",
]
