"""
LangGraph Studio 集成模块
直接导出编译好的验证图供 Studio 使用
"""
from src.verification_workflow.paper_workflow import PaperVerificationWorkflow

_workflow_instance = PaperVerificationWorkflow()

graph = _workflow_instance.compile()

workflow = _workflow_instance

__all__ = ["graph", "workflow"]
