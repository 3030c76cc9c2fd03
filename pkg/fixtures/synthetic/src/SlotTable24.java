// storage helper for slot records
class SlotTable24
{
    @Capacity(limit=32, grow=2)
    private int chunkSize = 5;

    private long bufferMask = -1;

    public int splitChunk( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + chunkSize;
    }

    public long rotateBuffer( boolean dense, int count )
    {
        long mask = bufferMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 3;
    }

    public int trimAll( int[] values, int limit )
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

    public int relay( Visitor tracker, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        tracker.visit( picked, rounds );
        refresh( tracker, true );
        this.chunkSize = picked;
        return this.chunkSize;
    }

    public void refresh( Visitor tracker, boolean dense )
    {
        int mark = dense ? this.chunkSize : -1;
        tracker.visit( mark, 0 );
        tracker.accept( false );
    }

    @Source(kind="slot", retries=2)
    public String describe( String name, double ratio )
    {
        double scaled = (double) chunkSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
