import time
from typing import Any, Dict, List, Optional

from langgraph.graph import END, StateGraph

from ..cli.report import CheckResult, Report
from ..utils.engine_config import EngineConfig
from .state_manager import StateManager, VerificationState
from .workflow_nodes import VerificationNodes

ENTRY_POINT = "symbolic_checks"
REQUIRED_NODES = [
    "symbolic_checks", "ledger_checks", "oracle_checks",
    "property_checks", "finalize", "error_handling",
]


class PaperVerificationWorkflow:
    """验收工作流

    符号计算 -> 账本 -> 有限域计数 -> 性质检查 -> 汇总；
    任一阶段出现领域错误即转入 error_handling 并以失败结束。
    """

    def __init__(self):
        self.state_manager = StateManager()
        self.nodes = VerificationNodes()
        self.graph = self._build_graph()
        self.compiled_graph = None

    def _build_graph(self) -> StateGraph:
        workflow = StateGraph(VerificationState)
        for name, func in self.nodes.get_node_router().items():
            workflow.add_node(name, func)
        workflow.set_entry_point(ENTRY_POINT)

        order = ["symbolic_checks", "ledger_checks", "oracle_checks", "property_checks", "finalize"]
        conditional = self.nodes.get_conditional_edges()
        for current, following in zip(order, order[1:]):
            workflow.add_conditional_edges(
                current,
                conditional[current],
                {following: following, "error_handling": "error_handling"},
            )
        workflow.add_edge("finalize", END)
        workflow.add_edge("error_handling", END)
        return workflow

    def compile(self):
        self.compiled_graph = self.graph.compile()
        return self.compiled_graph

    def run(self, config: Optional[EngineConfig] = None) -> VerificationState:
        """运行全部验收项

        Args:
            config: 引擎配置，默认使用 EngineConfig()

        Returns:
            VerificationState: 最终状态，status 为 completed 或 failed
        """
        if not self.compiled_graph:
            self.compile()
        initial = self.state_manager.initialize_state(
            workflow_id=f"paper_{time.time_ns()}", config=config
        )
        return self.compiled_graph.invoke(initial)

    def validate_workflow(self) -> List[str]:
        errors = []
        nodes = self.nodes.get_node_router()
        for node in REQUIRED_NODES:
            if node not in nodes:
                errors.append(f"Missing required node: {node}")
        if not self.nodes.get_conditional_edges():
            errors.append("No conditional edges configured")
        return errors

    def get_workflow_definition(self) -> Dict[str, Any]:
        return {
            "name": "Paper Verification Workflow",
            "description": "按阶段执行全部验收项并汇总为报告",
            "version": "1.0.0",
            "nodes": list(self.nodes.get_node_router().keys()),
            "entry_point": ENTRY_POINT,
        }


def state_to_report(state: VerificationState, source: str = "check-paper") -> Report:
    """把工作流最终状态转为报告"""
    config = state["config"]
    report = Report(source=source, seed=config.seed, checks=list(state["checks"]))
    for c in report.checks:
        for text in c.assumptions:
            report.assume(text)
    if state["errors"]:
        report.checks.append(CheckResult(
            id=0, name="workflow", expected="completed", actual=state["status"], passed=False,
            notes=list(state["errors"]),
        ))
    report.runtime_ms = f"{(state['last_update'] - state['start_time']).total_seconds() * 1000:.1f}"
    return report
