class TryCatch
{
    int safeParse(String raw)
    {
        try
        {
            return Integer.parseInt(raw);
        }
        catch (NumberFormatException bad)
        {
            return 0;
        }
        finally
        {
            System.out.println("done");
        }
    }
}
