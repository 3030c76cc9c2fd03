// storage helper for lane records
class LaneTable19
{
    @Capacity(limit=128, grow=2)
    private int cursorSize = 8;

    private long nodeMask = -1;

    public int splitCursor( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + cursorSize;
    }

    public long loadNode( boolean dense, int count )
    {
        long mask = nodeMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return splitCursor( mask, count ) + mask;
    }

    public int mergeAll( int[] values, int limit )
    {
        int acc = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            acc = acc + values[i];
        }
        if ( acc < 0 )
        {
            acc = -1;
        }
        return acc;
    }

    public int relay( Visitor sink, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        sink.visit( picked, rounds );
        refresh( sink, true );
        this.cursorSize = picked;
        return this.cursorSize;
    }

    public void refresh( Visitor sink, boolean dense )
    {
        int mark = dense ? this.cursorSize : -1;
        sink.visit( mark, 0 );
        sink.accept( false );
    }

    @Source(kind="lane", retries=3)
    public String describe( String title, double ratio )
    {
        double scaled = (double) cursorSize * ratio;
        long wide = (long) scaled;
        return title + "#" + wide.toString();
    }
}
