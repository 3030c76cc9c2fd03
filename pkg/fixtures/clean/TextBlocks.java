class TextBlocks
{
    String block = """
        line one
        line two "quoted"
        """;

    String mixed = """
        { "json": true }
        """;
}
