"""Test suite for LiteLLM Proxy with LangFuse."""
