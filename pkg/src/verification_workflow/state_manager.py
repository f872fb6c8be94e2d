from datetime import datetime
from typing import Any, Dict, List, Optional

from typing_extensions import TypedDict

from ..cli.report import CheckResult
from ..fforacle import CampaignReport
from ..utils.engine_config import EngineConfig


class VerificationState(TypedDict):
    """验收工作流状态"""
    config: EngineConfig

    # 验收项
    checks: List[CheckResult]
    campaign: Optional[CampaignReport]

    # 工作流状态
    stage: str  # symbolic, ledger, oracle, property, finalize
    status: str  # active, completed, failed

    # 元数据
    workflow_id: str
    start_time: datetime
    last_update: datetime

    # 错误处理
    errors: List[str]
    failed_stage: Optional[str]


STAGES = ["symbolic", "ledger", "oracle", "property", "finalize"]
STATUSES = ["active", "completed", "failed"]


class StateManager:
    """状态管理器"""

    def initialize_state(self, workflow_id: str,
                         config: Optional[EngineConfig] = None) -> VerificationState:
        now = datetime.now()
        return VerificationState(
            config=config or EngineConfig(),
            checks=[],
            campaign=None,
            stage="symbolic",
            status="active",
            workflow_id=workflow_id,
            start_time=now,
            last_update=now,
            errors=[],
            failed_stage=None,
        )

    def update_state(self, state: VerificationState, updates: Dict[str, Any]) -> VerificationState:
        for key, value in updates.items():
            if key in state:
                state[key] = value
        state["last_update"] = datetime.now()
        return state

    def add_checks(self, state: VerificationState, checks: List[CheckResult]) -> VerificationState:
        state["checks"] = state["checks"] + checks
        state["last_update"] = datetime.now()
        return state

    def add_error(self, state: VerificationState, error: str) -> VerificationState:
        state["errors"] = state["errors"] + [error]
        state["failed_stage"] = state["stage"]
        state["last_update"] = datetime.now()
        return state

    def transition_stage(self, state: VerificationState, new_stage: str) -> VerificationState:
        if new_stage not in STAGES:
            raise ValueError(f"Invalid stage: {new_stage}")
        state["stage"] = new_stage
        state["last_update"] = datetime.now()
        return state

    def update_status(self, state: VerificationState, status: str) -> VerificationState:
        if status not in STATUSES:
            raise ValueError(f"Invalid status: {status}")
        state["status"] = status
        state["last_update"] = datetime.now()
        return state

    def get_state_summary(self, state: VerificationState) -> Dict[str, Any]:
        checks = state["checks"]
        return {
            "workflow_id": state["workflow_id"],
            "stage": state["stage"],
            "status": state["status"],
            "checks": len(checks),
            "passed": sum(1 for c in checks if c.passed),
            "failed": [c.id for c in checks if not c.passed],
            "error_count": len(state["errors"]),
        }
